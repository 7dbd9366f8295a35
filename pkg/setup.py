from setuptools import setup, find_packages

setup(
    name="vgalg",
    version="0.1.0",
    packages=find_packages(include=["app", "app.*"]),
    install_requires=[
        "click>=8.2.1,<9.0.0",
        "pydantic>=2.11.7,<3.0.0",
        "numpy>=1.26,<3.0",
        "sympy>=1.12,<2.0",
    ],
    entry_points={
        "console_scripts": [
            "vgalg=app.cli:main",
            "vga=app.cli:main",
        ],
    },
    python_requires=">=3.10",
)
