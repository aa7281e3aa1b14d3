#!/usr/bin/env python
try:
    from setuptools import setup
    args = {}
except ImportError:
    from distutils.core import setup
    print("""\
*** WARNING: setuptools is not found.  Using distutils...
""")

from setuptools import setup

from os import path
setup(name='eisdet',
      version='0.1.0',
      description=('Exact q-expansions of Eisenstein series, Hankel '
                   'determinants and their modular-form identities.'),
      long_description= "" if not path.isfile("README.md") else open('README.md', 'r').read(),
      long_description_content_type="text/markdown",
      license='GNU GPLv3',
      python_requires='>=3.9',
      setup_requires=['pytest-runner',],
      tests_require=['pytest',
                     'numpy',
                     'sympy',
                     'termcolor'],
      install_requires=[
          "numpy",
          "sympy",
          "termcolor",
          "tqdm",
          "PyYAML"
      ],
      packages=['eisdet', 'eisdet.scripts'],
      scripts=['eisdet/scripts/eisdet_main.py'],
      package_dir={
          'eisdet': 'eisdet'
      },
      package_data={
          'eisdet': [
              'templates/*.yml',
      ]},
      include_package_data=True,
      entry_points={
          'console_scripts': ['eisdet=eisdet.scripts.eisdet_main:main']
      },
      classifiers=[
          'Development Status :: 4 - Beta',
          'Intended Audience :: Science/Research',
          'Intended Audience :: Developers',
          'Natural Language :: English',
          'Operating System :: MacOS',
          'Operating System :: POSIX :: Linux',
          'Programming Language :: Python',
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: 3.9',
          'Topic :: Scientific/Engineering :: Mathematics',
      ],
     )
