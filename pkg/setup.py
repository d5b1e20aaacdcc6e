# -*- coding: utf-8 -*-

# DO NOT EDIT THIS FILE!
# This file has been autogenerated by dephell <3
# https://github.com/dephell/dephell

try:
    # external
    from setuptools import setup
except ImportError:
    # built-in
    from distutils.core import setup

# built-in
import os.path


readme = ''
here = os.path.abspath(os.path.dirname(__file__))
readme_path = os.path.join(here, 'README.rst')
if os.path.exists(readme_path):
    with open(readme_path, 'rb') as stream:
        readme = stream.read().decode('utf8')

setup(
    long_description=readme,
    name='deltahull',
    version='0.1.0',
    description='Delta-convex hulls, convexity invariants and closed forms for graphs',
    python_requires='>=3.8',
    author='deltahull contributors',
    license='MIT',
    keywords='graph convexity hull helly radon caratheodory chordal graph6',
    classifiers=[
        'Development Status :: 3 - Alpha', 'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    entry_points={"console_scripts": ["deltahull = deltahull.cli:entrypoint"]},
    packages=[
        'deltahull', 'deltahull.actions', 'deltahull.commands', 'deltahull.config',
        'deltahull.controllers', 'deltahull.converters', 'deltahull.models'
    ],
    package_dir={"": "."},
    package_data={},
    install_requires=[
        'attrs>=19.2.0', 'cerberus>=1.3', 'dephell-argparse>=0.1.1',
        'networkx>=2.4', 'tomlkit>=0.11'
    ],
    extras_require={
        "dev": ["flake8-isort", "isort[pyproject]", "pytest"],
        "full": ["colorama", "pygments", "tabulate"],
        "tests": ["pytest"]
    },
)
