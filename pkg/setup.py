"""
Local testing:
pip install -e .
python -m unittest discover tests

Upload to PyPI

python setup.py sdist
twine upload --repository pypitest dist/python_nichehyper-X.X.X.tar.gz
twine upload --repository pypi dist/python_nichehyper-X.X.X.tar.gz
"""
from setuptools import setup, find_packages
from nichehyper import __version__

try:
    with open('README.md', 'r') as f:
        long_description = f.read()
except IOError:
    long_description = '''
Builds acyclic digraphs whose niche hypergraph is a given linear hypertree,
realizes petal flowers and computes small niche numbers exhaustively.
'''.strip()

setup(
    name='python-nichehyper',
    version=__version__,
    description='Niche hypergraphs of acyclic digraphs',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
    ],
    install_requires=[
        'msgpack',
        'networkx',
    ],
    extras_require={
        'test': ['hypothesis'],
    },
    entry_points={
        'console_scripts': ['nichehyper=nichehyper.cli:main'],
    },
    keywords='hypergraph digraph niche graph combinatorics',
    packages=find_packages(exclude=['contrib', 'docs', 'tests*']),
)
