#!/usr/bin/env python
# -*- coding: utf-8 -*-


try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read().replace('.. :changelog:', '')

requirements = [
    'sympy>=1.9',
    'gmpy2>=2.1'
]

test_requirements = [
    'bumpversion==0.6.0',
    'wheel>=0.37',
    'watchdog>=2.1',
    'flake8>=4.0',
    'tox>=3.24',
    'coverage>=6.0',
    'Sphinx>=4.0',
    'mock>=4.0'
]


setup(
    name='global-fields',
    version='0.1.0',
    description="Places, divisors, h0 and certified Riemann-Roch checks on "
                "global fields",
    long_description=readme + '\n\n' + history,
    author="The global-fields Authors",
    packages=[
        'global_fields',
    ],
    package_dir={'global_fields': 'global_fields', },
    include_package_data=True,
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'global-fields=global_fields.cli:main',
        ],
    },
    license="Apache License 2.0",
    zip_safe=False,
    keywords='global-fields number-fields function-fields riemann-roch',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.8',
    test_suite='tests',
    tests_require=test_requirements
)
