import setuptools

# Use README for long description
with open('README.md', 'r') as readme_fp:
    long_description = readme_fp.read()

with open('requirements.txt', 'r') as req_fp:
    required_libs = req_fp.readlines()


# lattice_spectra setup
setuptools.setup(
    name='lattice_spectra',
    description='Ideal spectra, special decompositions and theorem checkers for finite decomposable lattices.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    version='0.2.0',
    license='BSD (3-clause)',
    packages=setuptools.find_packages(exclude=['docs', 'tests', 'examples', 'venv']),
    install_requires=required_libs,
    entry_points={
        'console_scripts': [
            'lattice-spectra=lattice_spectra.cli:main',
        ],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    keywords='lattice ideal prime spectrum poset birkhoff distributive',
    python_requires='>=3.8',
)
