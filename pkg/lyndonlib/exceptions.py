# -*- coding: utf-8 -*-

"""
Exception classes for lyndonlib.
"""


class LyndonError(Exception):
    """Base class of the errors raised by lyndonlib."""


class DomainError(LyndonError, ValueError):
    """An operation was called outside of its domain."""


class NotLyndonError(DomainError):
    """A Lyndon word was required."""


class InvalidPermutationError(DomainError):
    """The values do not form a permutation of 0..m-1."""


class AlphabetExhaustedError(DomainError):
    """There is no letter larger than 'z'."""


class NotPspError(LyndonError):
    """The permutation is not the prefix standard permutation of a Lyndon
    word.

    When the rejection comes from a failed verification, `candidate` is the
    word that was built and `candidate_psp` its own permutation (None if the
    candidate is not even a Lyndon word).
    """

    def __init__(self, message, candidate=None, candidate_psp=None):
        super(NotPspError, self).__init__(message)
        self.candidate = candidate
        self.candidate_psp = candidate_psp


class InternalError(LyndonError):
    """An invariant of a construction was broken."""
