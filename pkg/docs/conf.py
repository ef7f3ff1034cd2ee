# -*- coding: utf-8 -*-
#
# pyIsoRecal documentation build configuration file
#
import os
import sys
sys.path.insert(0, os.path.abspath('..'))

from pyisorecal._version import __version__

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.autosummary']

napoleon_use_param = False

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = 'pyIsoRecal'
copyright = '2026, pyIsoRecal developers'
author = 'pyIsoRecal developers'

version = __version__
release = __version__

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = False

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
}

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

htmlhelp_basename = 'pyIsoRecaldoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'pyIsoRecal.tex', 'pyIsoRecal Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'pyisorecal', 'pyIsoRecal Documentation',
     [author], 1)
]
