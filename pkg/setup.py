import setuptools

with open("README.md", "r") as fh:
  long_description = fh.read()

setuptools.setup(
  name="linpart",
  version="0.0.1",
  description="Linear-work multilevel graph partitioning with sparsification",
  long_description=long_description,
  # long_description_content_type="text/markdown",
  packages=setuptools.find_packages(exclude=("tests", "experiments")),
  classifiers=(
    "Programming Language :: Python :: 3",
    "Programming Language :: Python :: 2",
    "Intended Audience :: Science/Research",
    "Operating System :: OS Independent",
    "Topic :: Scientific/Engineering :: Mathematics",
    "Development Status :: 3 - Alpha",
  ),
  install_requires=[
    'six',
    'logzero',
    'numpy',
  ],
  entry_points={
    'console_scripts': [
      'linpart=commands.main:main',
    ],
  },
)
