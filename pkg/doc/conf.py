# -*- coding: utf-8 -*-
#
# pentaforge documentation build configuration file
#
# Run from doc/: sphinx-build -b html . _build/html

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# set __version__
try:
    with open('../pentaforge/__version__.py') as f:
        lines = f.readlines()
    version = lines[-1].strip().split("'")[1].strip()
except Exception:
    version = '0.0.0'
versions = version.split(".")
main_version = "{}.{}".format(versions[0], versions[1])

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.autosummary',
              'sphinx.ext.napoleon',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode',
              ]
autosummary_generate = True
autosummary_imported_members = True
autodoc_mock_imports = ['hqsbase', 'galois']
autoclass_content = 'both'
autodoc_default_options = {
    'members': True,
    'special-members': '__init__',
    'private-members': False,
    'imported-members': False,
}
napoleon_google_docstring = True
napoleon_numpy_docstring = False

templates_path = ['_templates']
source_suffix = {
    '.rst': 'restructuredtext',
}
master_doc = 'index'

project = 'pentaforge'
copyright = '2019-2021, HQS Quantum Simulations GmbH'
author = 'The pentaforge developers'
version = main_version
release = version
language = 'en'
exclude_patterns = ['_build', 'generated/*.orig']
pygments_style = 'default'

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'pentaforgedoc'

man_pages = [
    (master_doc, 'pentaforge', 'pentaforge Documentation', [author], 1)
]
