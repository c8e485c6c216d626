#!/usr/bin/env python

from setuptools import find_packages, setup


install_requires = [
    'sympy>=1.12'
]

tests_require = ['pytest', 'pytest-mock', 'tox']
extras_require = {
    'test': tests_require,
}

setup(
    name='acf_decide',
    version='0.1.0',
    packages=find_packages(exclude=['tests*', 'docs*']),
    install_requires=install_requires,
    extras_require=extras_require,
    python_requires='>=3.9',
    zip_safe=True,
    description="First-order logic over finite structures and decisions for algebraically closed fields",
    long_description=(
        "Parsing and evaluation of first-order formulas over finite structures, quantifier elimination "
        "for algebraically closed fields and its applications: Nullstellensatz solvability, characteristic "
        "transfer, absolute irreducibility and strong minimality."
    ),
    license='BSD',
    test_suite='tests',
    tests_require=['pytest'],
    entry_points={
        'console_scripts': [
            'acf-decide = acf_decide.cli:console_main',
            'acf-demo-lefschetz = acf_decide.demos.lefschetz:console_main',
        ],
    },
)
