from setuptools import setup, find_packages

setup(
    name="psl2-classes",
    version="1.0.0",
    packages=find_packages(include=["src", "src.*"]),
    install_requires=[
        "pydantic>=2.4.2",
        "pydantic-settings>=2.0.0",
        "python-dotenv>=1.0.0",
        "sympy>=1.12",
    ],
    entry_points={
        "console_scripts": ["psl2-classes=src.cli.main:main"],
    },
    python_requires=">=3.9",
)
