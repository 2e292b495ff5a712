"""# descensus.setup

Descensus setup utility.
"""

from setuptools import find_packages, setup

setup(
    name =              "descensus",
    version =           "0.1.0",
    description =       "Closed-loop simulator for vision-guided UAV landing on a ground marker",
    license =           "GNU GENERAL PUBLIC LICENSE Version 3, 29 June 2007",
    packages =          find_packages(exclude = ["tests", "examples", "examples.*"]),
    py_modules =        ["main", "__args__"],
    python_requires =   ">=3.10",
    install_requires =  [
                            "numpy",
                            "opencv-python-headless",
                            "pillow",
                            "pyserial",
                            "termcolor"
                        ],
    extras_require =    {
                            "test": ["pytest"]
                        },
    entry_points =      {
                            "console_scripts": ["descensus = main:main"]
                        }
)
