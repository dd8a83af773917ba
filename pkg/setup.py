#!/usr/bin/env python
from setuptools import setup


exec(open('bettipy/version.py').read())


setup(name='bettipy',
      version=__version__,
      description='Betti number tests of homological equivalence for point clouds',
      long_description=open('README.rst').read(),
      classifiers=[
          'Development Status :: 4 - Beta',
          'Environment :: Console',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: GNU General Public License v2 or later (GPLv2+)',
          'Operating System :: POSIX',
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10',
          'Programming Language :: Python :: 3.11',
          'Programming Language :: Python :: 3.12',
          'Topic :: Scientific/Engineering :: Mathematics',
          'Topic :: Scientific/Engineering :: Visualization'
      ],
      packages=['bettipy', 'bettipy.test'],
      package_data={'bettipy': ['data/experiments/*.json']},
      entry_points={
          'console_scripts': ['bettipy=bettipy.cli:main'],
      },
      python_requires='>=3.9',
      install_requires=['numpy', 'scipy', 'matplotlib', 'astropy',
                        'pydantic>=2'],
      setup_requires=['pytest-runner'],
      tests_require=['pytest'],
      test_suite='bettipy',
      license='GPLv2'
      )
