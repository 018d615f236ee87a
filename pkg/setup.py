from setuptools import find_packages, setup

setup(
    name="lgr",
    version="0.1",
    python_requires=">=3.8",
    install_requires=["ply", "pytest", "graphviz", "numpy", "sympy", "hypothesis"],
    packages=find_packages(exclude=["tests", "examples"]),
    entry_points={"console_scripts": ["lgr = lgr.lgr_cli:main"]},
)
