from setuptools import setup


def merge_extras_reqs(extras_requirements, pattern):
    """
    Merge extras requirements dictionary keys if they start with string
    `pattern`.

    Args:
        extras_requirements ({str: [str]}): A dictionary containing extras
            names and its requirements list.
        pattern (str): Pattern to use for selecting keys to merge.

    Returns:
        list: A list of strings representing merged requirements from all of
            the extras groups matching the pattern.
    """
    requirements = []
    for key in extras_requirements:
        if key.startswith(pattern):
            requirements.extend(extras_requirements[key])

    return sorted(set(requirements))


def read_requirements(*paths):
    """
    Open multiple requirements.txt files and concatenate results into a single
    requirements list without repeats.

    Args:
        paths ([str]): A list of requirements file paths

    Returns:
        list: A list of requirements from all of the files
    """
    reqs = []
    for path in paths:
        with open(path, 'r') as f:
            nth_reqs = f.read().splitlines()
            # remove empty lines, comments and nested -r includes
            filtered = filter(lambda e: e.strip() != "", nth_reqs)
            filtered = filter(lambda e: not e.strip().startswith(('#', '-')),
                              filtered)
            reqs.extend(filtered)

    return sorted(set(reqs))


# load package version
exec(open("homnambu/version/version.py").read())

# load minimal requirements
requirements = read_requirements("requirements/base.txt")

# load "atomic" extras requirements
extras_requirements = {
    "test": read_requirements("requirements/extras/test.txt"),
}

# create artifical groupings for easier install on user-side
extras_groups = {}
extras_groups["all"] = merge_extras_reqs(extras_requirements, pattern="")

# add to extras_requirements
extras_requirements.update(extras_groups)

setup(
    name="homnambu",
    version=__version__,  # noqa
    description="Exact verification of ternary hom-Nambu-Lie algebras and "
                "their multi-parameter formal deformations",
    classifiers=[
        "License :: OSI Approved :: MIT License",

        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",

        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=[
        "homnambu",
        "homnambu.cli",
        "homnambu.config",
        "homnambu.creator",
        "homnambu.decorators",
        "homnambu.deformation",
        "homnambu.homalgebra",
        "homnambu.models",
        "homnambu.resource",
        "homnambu.resource.parsers",
        "homnambu.scalars",
        "homnambu.version",
    ],
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require=extras_requirements,
    entry_points={
        "console_scripts": ["homnambu=homnambu.cli:main"],
    },
    include_package_data=True
)
