#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages
import os
import re

# Ler a versão do arquivo __init__.py
with open(os.path.join('src', '__init__.py'), 'r') as f:
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", f.read(), re.M)
    if version_match:
        version = version_match.group(1)
    else:
        version = '0.1.0'  # Versão padrão se não conseguir encontrar

# Ler requisitos do arquivo requirements.txt, sem comentários
with open('requirements.txt', 'r') as f:
    requirements = [line.split('#')[0].strip() for line in f if line.split('#')[0].strip()]

setup(
    name='homdist-cli',
    version=version,
    description='CLI para homomorfismos distintivos de grafos e construções sobre oráculos',
    packages=find_packages(exclude=['tests', 'examples', 'examples.*']),
    include_package_data=True,
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'homdist=src.__main__:cli',
            'homdist-cli=src.__main__:cli',
        ],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: Portuguese (Brazilian)',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    python_requires='>=3.9',
)
