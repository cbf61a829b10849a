from setuptools import setup, find_packages

setup(
    name="chainscope",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["chainscope"],
    include_package_data=True,
    data_files=[("schemas", [
        "schemas/envelope.schema.json",
        "schemas/diagnostic.schema.json",
        "schemas/analysis_report.schema.json",
        "schemas/classifier_report.schema.json",
        "schemas/functionals.schema.json",
        "schemas/suite_report.schema.json",
        "schemas/space.schema.json",
        "schemas/model.schema.json",
    ])],
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.11',
        'python-dotenv>=0.19.0',
    ],
    extras_require={
        'test': ['pytest>=7.0', 'hypothesis>=6.0', 'jsonschema>=4.18'],
    },
    entry_points={
        'console_scripts': ['chainscope=chainscope:main'],
    },
    description="Epsilon-chain geometry, covering functionals and hierarchy classifiers",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
)
