# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# built-in
import os
import sys
from datetime import date

# external
import alabaster
from recommonmark.transform import AutoStructify


sys.path.append(os.path.abspath('../'))


# -- General configuration ---------------------------------------------------

extensions = [
    'alabaster',
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.viewcode',
    'recommonmark',
]

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'

project = 'deltahull'
copyright = '{}, deltahull contributors'.format(date.today().year)
author = 'deltahull contributors'

version = '0.1.0'
release = version
language = None
exclude_patterns = []
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_theme_path = [alabaster.get_path()]
html_theme_options = {
    'description': 'Delta-convexity of graphs',
    'sidebar_width': '240px',
    'show_powered_by': 'false',
}
htmlhelp_basename = 'deltahulldoc'
man_pages = [(master_doc, 'deltahull', 'deltahull Documentation', [author], 1)]


def setup(app):
    app.add_config_value('recommonmark_config', {
        'enable_eval_rst': True,
    }, True)
    app.add_transform(AutoStructify)
