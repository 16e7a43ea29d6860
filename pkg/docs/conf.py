# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

from eulerZeta import __version__  # noqa: E402

# -- Project information -----------------------------------------------------

project = "eulerZeta"
copyright = "2024, Arfima Trading"
author = "Arfima Trading"

# The full version, including alpha/beta/rc tags
release = __version__


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "myst_parser",
    "sphinx_design",
    "sphinx_copybutton",
]

# To use sphinx-design grid
myst_enable_extensions = ["colon_fence"]

napoleon_numpy_docstring = True
napoleon_google_docstring = False
autodoc_member_order = "bysource"

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store", "README.md"]


# -- Options for HTML output -------------------------------------------------

html_theme = "pydata_sphinx_theme"

html_theme_options = {
    "use_edit_page_button": True,
    "pygment_dark_style": "material",
    "show_toc_level": 2,
}

# For Edit Button
html_context = {
    "gitlab_url": "https://git.arfima.com",
    "gitlab_user": "arfima",
    "gitlab_repo": "arfima/eulerZeta",
    "gitlab_version": "main",
    "doc_path": "docs",
}

html_title = f"{project} {release}"
