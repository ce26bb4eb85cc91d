#!/usr/bin/env python
# -*- coding: utf-8 -*-

import io

from setuptools import setup, find_packages

from lyndonlib import get_version

with io.open('README.rst', encoding='utf-8-sig') as readme_file:
    long_description = readme_file.read()

package_data = {
    '': ['README.rst'],
}

scripts = ['lyndon']

install_requires = []

tests_require = [
    'mock',
    'hypothesis',
]

setup(
    name="lyndon-tools",
    version=get_version(),
    scripts=scripts,
    description="Linear-time algorithms on Lyndon words and a command line"
        " interface to them",
    long_description=long_description,
    license="BSD",
    install_requires=install_requires,
    tests_require=tests_require,
    test_suite='lyndonlib.tests',
    zip_safe=False,
    packages=find_packages(),
    include_package_data=True,
    package_data=package_data,
    keywords=('lyndon words', 'stringology', 'factorization',
        'prefix sorting',),
)
