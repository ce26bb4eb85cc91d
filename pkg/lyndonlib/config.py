# -*- coding: utf-8 -*-
"""
INI configuration of the `lyndon` command.

A `.lyndonrc` file holds the defaults of the commands; command-line
options always win over it.
"""
import os
import configparser

from lyndonlib.log import logger


RC_NAME = '.lyndonrc'

DEFAULTS = {
    'main': {
        'log_level': 'INFO',
        'workers': '4',
    },
    'check': {
        'sigma': '2',
        'maxlen': '14',
        'word_maxlen': '12',
    },
    'bench': {
        'n': '1000000',
        'trials': '3',
        'seed': '0',
    },
}


class OrderedRawConfigParser(configparser.RawConfigParser):
    """
    Overload standard Class configparser.RawConfigParser
    """
    def write(self, fp, space_around_delimiters=True):
        """Write an .ini-format representation of the configuration state."""
        for section in sorted(self._sections):
            fp.write("[%s]\n" % section)
            for key in sorted(self._sections[section]):
                fp.write("%s = %s\n" % (key, str(
                    self._sections[section][key]).replace('\n', '\n\t')))
            fp.write("\n")

    optionxform = str


def find_rc(path=os.path.curdir, previous=None):
    """
    Return the path of the closest .lyndonrc file.

    The 'path' should be a DIRECTORY.
    This process is functioning recursively from the given directory to each
    one of the ancestors dirs.
    """
    path = os.path.abspath(path)
    if path == previous:
        return None
    joined = os.path.join(path, RC_NAME)
    if os.path.isfile(joined):
        return joined
    return find_rc(os.path.dirname(path), path)


def resolve_rc(explicit=None, cwd=None):
    """
    Pick the configuration file to read: the explicit path, else the first
    .lyndonrc above the working directory, else ~/.lyndonrc if it exists.
    """
    if explicit:
        return explicit
    found = find_rc(cwd or os.getcwd())
    if found:
        return found
    home_rc = os.path.join(os.path.expanduser("~"), RC_NAME)
    if os.path.isfile(home_rc):
        return home_rc
    return None


class Settings(object):
    """
    Typed access to the configuration, falling back to DEFAULTS.
    """

    def __init__(self, path=None):
        self.path = path
        self.parser = OrderedRawConfigParser()
        if path is not None:
            if not os.path.isfile(path):
                raise IOError("Configuration file %s does not exist." % path)
            try:
                self.parser.read(path)
            except configparser.Error as e:
                raise ValueError("Malformed configuration file %s: %s"
                    % (path, e))
            logger.debug("Read configuration from %s." % path)

    @classmethod
    def load(cls, explicit=None, cwd=None):
        if explicit:
            return cls(explicit)
        return cls(resolve_rc(cwd=cwd))

    def get(self, section, key):
        if self.parser.has_option(section, key):
            return self.parser.get(section, key)
        try:
            return DEFAULTS[section][key]
        except KeyError:
            raise configparser.NoOptionError(key, section)

    def getint(self, section, key):
        value = self.get(section, key)
        try:
            return int(value)
        except ValueError:
            raise ValueError("Option %s in section [%s] must be an integer,"
                " got %r." % (key, section, value))

    def __repr__(self):
        return "Settings(%r)" % self.path


def write_skeleton(path):
    """Write a .lyndonrc holding the default values to `path`."""
    config = OrderedRawConfigParser()
    for section, values in DEFAULTS.items():
        config.add_section(section)
        for key, value in values.items():
            config.set(section, key, value)
    with open(path, 'w') as fh:
        config.write(fh)
