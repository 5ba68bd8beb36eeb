# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------

project = 'scratch-perfume'
from datetime import datetime
year = datetime.now().year
copyright = f'{year}, the scratch-perfume developers'
author = 'the scratch-perfume developers'

# The full version, including alpha/beta/rc tags
import scratchperfume
release = scratchperfume.__version__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
    'numpydoc.numpydoc',
]

# Add any paths that contain templates here, relative to this directory.
templates_path = ['_templates']

# NumPy
numpydoc_class_members_toctree = False
numpydoc_show_class_members = True
numpydoc_show_inherited_class_members = False

# generate autosummary even if no references
autosummary_generate = True
autodoc_member_order = 'bysource'
autodoc_default_flags = ['members']

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'tensorly_sphinx_theme'
html_show_sphinx = False

html_theme_options = {
    'nav_links' : [('Install', 'install'),
                   ('User Guide', 'user_guide/index'),
                   ('API', 'modules/api'),
                  ],
}

# Remove the permalinks ("¶" symbols)
html_permalinks_icon = ""
