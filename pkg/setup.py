from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    # Self-descriptive entries which should always be present
    name='ASCM',
    description="Causal interpretability analyses of augmented structural causal models",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='Open Source',

    # What packages are required for install
    install_requires=['numpy', 'networkx', 'parglare>=0.16', 'click'],
    extras_require={
        'tests': [
            'unittest',
        ],
    },
    packages=["ASCM",
              "ASCM.dsl",
              "ASCM.model",
              "ASCM.graph",
              "ASCM.inference",
              "ASCM.corpus"],
    package_data={"ASCM.corpus": ["*.scm"]},
    entry_points={
        'console_scripts': ['ascm=ASCM.cli:main'],
    },
)
