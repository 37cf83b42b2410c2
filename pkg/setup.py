import ast
import re

from setuptools import setup, find_packages


VERSION_RE = re.compile(r'__version__\s+=\s+(.*)')


with open('tcgtools/__init__.py', 'rb') as f:
    version = str(ast.literal_eval(VERSION_RE.search(f.read().decode('utf-8')).group(1)))


setup(
    name='tcgtools',
    version=version,
    description='A workbench for tree-controlled grammars with subregular control languages.',
    license='MIT',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    package_data={'tcgtools': ['templates/*.txt']},
    python_requires='>=3.8',
    install_requires=[
        'appdirs',
        'cached_property',
        'contextlib2',
        'jinja2',
    ],
    setup_requires=['pytest-runner'],
    tests_require=['pytest', 'hypothesis'],
    entry_points={
        'console_scripts': ['tcgtools = tcgtools.cli:main'],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
