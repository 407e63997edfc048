from setuptools import setup, find_packages

DESCRIPTION = "Volumes and growth ratios of hyperspheres circumscribing unit hypercubes"
LONG_DESCRIPTION = DESCRIPTION
NAME = "hypertools"
AUTHOR = "hypertools developers"
AUTHOR_EMAIL = ""
MAINTAINER = "hypertools developers"
MAINTAINER_EMAIL = ""
LICENSE = 'MIT'

VERSION = '1.0.0'

setup(name=NAME,
      version=VERSION,
      description=DESCRIPTION,
      long_description=LONG_DESCRIPTION,
      author=AUTHOR,
      author_email=AUTHOR_EMAIL,
      maintainer=MAINTAINER,
      maintainer_email=MAINTAINER_EMAIL,
      license=LICENSE,
      packages=find_packages(),
      entry_points={
          'console_scripts': [
              'hyperVOL=hyperVOL.hyperVOL:run'
          ],
      },
      install_requires=['numpy',
                        'scipy'],
      extras_require={
          'test': ['pytest', 'mpmath'],
      },
      classifiers=['Development Status :: 4 - Beta',\
                       'Programming Language :: Python :: 3',\
                       'License :: OSI Approved :: MIT License',\
                       'Operating System :: OS Independent',\
                       'Intended Audience :: Science/Research',\
                       'Topic :: Scientific/Engineering :: Mathematics']
     )
