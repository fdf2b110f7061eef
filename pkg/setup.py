from setuptools import setup


setup(
    name='qutrit-cluster',
    version='0.1.0',
    description='Clustering of 2-D points by simulated adiabatic annealing '
                'on qutrits',
    packages=[
        'annealer',
        'cli',
        'clustering',
        'collector',
        'hamiltonians',
        'plotter',
        'qutrits',
        'runner',
        'utils',
        'xport'
    ],
    py_modules=['config'],
    data_files=[('assets/presets', [
        'assets/presets/fig1.json',
        'assets/presets/fig2.json',
        'assets/presets/fig3.json',
        'assets/presets/fig4.json'
    ])],
    python_requires='>=3.9',
    install_requires=[
        'numpy',
        'scipy>=1.9',
        'pandas',
        'matplotlib'
    ],
    entry_points={
        'console_scripts': ['qutrit-cluster=cli.cli:main']
    },
)
