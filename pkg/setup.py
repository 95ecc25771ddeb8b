from setuptools import setup, find_packages
from samuel_version import __version__


with open("README.md") as f:
    LONG_DESCRIPTION = f.read()

setup(
    name="samuel",
    version=__version__,
    packages=find_packages(exclude=["tests", "tests.*"]),
    description="Hilbert-Samuel coefficients of parameter ideals in local rings",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    license="Apache-2.0",
    keywords="commutative algebra groebner hilbert samuel local ring",
    install_requires=["pandas", "fs", "pydantic>=2"],
    extras_require={},
    entry_points={"console_scripts": ["samuel=samuel.cli:main"]},
    classifiers=[
        # "3 - Alpha", "4 - Beta" or "5 - Production/Stable"
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3 :: Only",
    ],
    python_requires=">=3.8",
)
