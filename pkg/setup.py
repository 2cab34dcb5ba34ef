#!/usr/bin/env python3
"""
Setup script for the qprefix package.
"""

from setuptools import setup, find_packages
import os

# Read version from the package
about = {}
with open(os.path.join('qprefix', '__init__.py'), 'r') as f:
    exec(f.read(), about)

# Read requirements from requirements.txt, skipping comment lines
with open('requirements.txt', 'r') as f:
    requirements = [
        line.split('#')[0].strip() for line in f
        if line.strip() and not line.strip().startswith('#')
    ]

# Read long description from README
with open('README.md', 'r', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name="qprefix",
    version=about['__version__'],
    author=about['__author__'],
    author_email="info@example.com",
    description="Indeterminate-length quantum bit strings, prefix-free codes and the quantum Kraft inequality",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'qprefix=qprefix.__main__:main',
        ],
    },
    include_package_data=True,
)
