#!/usr/bin/env python
"""
Created on Oct 20 2026
"""
from os import path
from setuptools import find_packages, setup

CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Intended Audience :: Developers',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Operating System :: Microsoft :: Windows',
    'Operating System :: POSIX',
    'Operating System :: Unix',
    'Operating System :: MacOS',
    'Natural Language :: English',
]

FILE_DIR = path.abspath(path.dirname(__file__))
with open(path.join(FILE_DIR, 'README.md')) as f:
    LONG_DESCRIPTION = f.read()

VERSION = {}
with open(path.join(FILE_DIR, 'pyisorecal', '_version.py')) as f:
    exec(f.read(), VERSION)

setup(
    name="pyIsoRecal",
    version=VERSION['__version__'],
    python_requires=">=3.8",
    install_requires=[
        'numpy',
        'scipy>=1.12',
        'pandas',
    ],
    extras_require={
        'test': [
            'pytest',
            'pytest-cov',
            'hypothesis',
            'scikit-learn',
        ],
    },
    entry_points={
        'console_scripts': ['pyisorecal=pyisorecal.cli:main'],
    },
    packages=find_packages(exclude=['test', 'test.*']),
    description="pyIsoRecal: isotonic recalibration of regression models",
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    license="MIT",
    keywords="isotonic regression calibration pool adjacent violators",
    classifiers=CLASSIFIERS,
    platforms=["Windows", "Linux", "Solaris", "Mac OS-X", "Unix"],
    zip_safe=False
)
