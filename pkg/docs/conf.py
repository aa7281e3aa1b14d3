#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# eisdet documentation build configuration file.
import os
import sys
sys.path.insert(0, os.path.abspath('../'))

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinxcontrib.napoleon']

source_suffix = '.rst'
master_doc = 'index'

project = 'eisdet'
copyright = '2026, eisdet developers'
author = 'eisdet developers'
version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

html_theme = 'nature'
htmlhelp_basename = 'eisdetdoc'

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None),
                       'sympy': ('https://docs.sympy.org/latest/', None)}
