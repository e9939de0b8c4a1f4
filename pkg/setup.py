from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="wordpack",
    version="0.1.0",
    description="Lossless text compression with a 19-bit word lookup table and a deflate second stage",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: System :: Archiving :: Compression",
    ],
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.8",
    include_package_data=True,
    install_requires=[
        "python-dotenv==1.0.0",
        "termcolor==1.1.0",
        "setuptools>=42",
        "wheel"
    ],
    extras_require={
        "test": [
            "pytest>=7.0",
            "hypothesis>=6.0",
        ],
        "docs": [
            "mkdocs",
            "mkdocs-material",
            "mkdocstrings[python]",
        ],
    },
    entry_points={
        "console_scripts": [
            "wordpack=wordpack.cli.main:main",
        ],
    },
)
