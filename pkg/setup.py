from setuptools import setup, find_packages

# Installs the `src` package tree and exposes the `omegagames` command.

setup(
    name="omega-games",
    version="1.0.0",
    description="Games of infinite duration on graphs: parity and Muller solvers, "
                "Zielonka-tree classification, reductions and positional strategies.",

    packages=find_packages(include=["src", "src.*"]),
    py_modules=["omegagames"],

    include_package_data=True,

    install_requires=[
        "networkx",
        "pydot",
        "numpy",
        "tqdm",  # progress bars in refutation sweeps
    ],

    # `omegagames` runs omegagames.py's main()
    entry_points={
        "console_scripts": [
            "omegagames=omegagames:main",
        ]
    },

    python_requires=">=3.10",
)
