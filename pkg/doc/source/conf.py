# -*- coding: utf-8 -*-
#
# Chiral Edge documentation build configuration file.

import sys
import os

# The package is documented from the source tree
sys.path.insert(0, os.path.abspath('../../'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
    'numpydoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'Chiral Edge'
copyright = u'2026 The chiral-edge developers'

version = '0.1'
release = '0.1'

exclude_patterns = []

add_module_names = False
show_authors = False
pygments_style = 'sphinx'

# numpydoc lists class members itself
numpydoc_show_class_members = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'ChiralEdgedoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    ('index', 'ChiralEdge.tex', u'Chiral Edge Documentation',
     u'The chiral-edge developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'chiral-edge', u'Chiral Edge Documentation',
     [u'The chiral-edge developers'], 1)
]
