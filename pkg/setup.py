from setuptools import setup, find_packages

setup(
    name="extremal_workbench",
    version="1.0.0",
    packages=find_packages(include=["src*", "tests*"]),
    package_dir={"": "."},
    package_data={"src.config": ["catalog.json"]},
    py_modules=["main"],
    python_requires=">=3.8",
    install_requires=[
        "numpy",
        "networkx",
        "tqdm",
    ],
    entry_points={"console_scripts": ["extremal=main:main"]},
    test_suite="tests",
)
