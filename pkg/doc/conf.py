# Sphinx configuration for the bettipy documentation.
#
# Build with ``sphinx-build -b html doc doc/.build``; the API pages listed in
# the autosummary tables are generated under ``generated/``.

import glob
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import bettipy

extensions = ['sphinx.ext.autosummary', 'sphinx.ext.autodoc', 'numpydoc']

# numpydoc lists class members itself
numpydoc_show_class_members = False
autosummary_generate = glob.glob('*.rst')

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['.build']

project = 'bettipy'
copyright = 'GPLv2+'
version = bettipy.__version__
release = version
today_fmt = '%B %d, %Y'

html_last_updated_fmt = '%b %d, %Y'
htmlhelp_basename = 'bettipydoc'

latex_documents = [
    ('index', 'bettipy.tex', 'bettipy Documentation', '', 'manual'),
]
