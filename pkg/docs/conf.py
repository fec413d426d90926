# This code is part of unipotent-lifts.
#
# (C) Copyright the unipotent-lifts developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at https://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

import os
import sys
from importlib.metadata import version as metadata_version

# The following line is required for autodoc to be able to find and import the code whose API should
# be documented.
sys.path.insert(0, os.path.abspath("../python"))

project = "Unipotent Lifts"
project_copyright = "2026, the unipotent-lifts developers"
description = "Canonical lifts of infinitesimal one-parameter subgroups over finite fields"
author = "the unipotent-lifts developers"
language = "en"
release = metadata_version("unipotent-lifts")

html_theme = "alabaster"

# Sphinx should ignore these patterns when building.
exclude_patterns = [
    "_build",
    "README.md",
]

extensions = [
    "sphinx.ext.napoleon",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx_copybutton",
    "sphinx_reredirects",
    "reno.sphinxext",
    "sphinx_design",
    "sphinxcontrib.katex",
]

copybutton_exclude = ".linenos, .gp, .go"

html_last_updated_fmt = "%Y/%m/%d"
html_title = f"{project} {release}"

# This allows RST files to put `|version|` in their file and
# have it updated with the release set in conf.py.
rst_prolog = f"""
.. |version| replace:: {release}
"""

autosummary_generate = True
autosummary_generate_overwrite = False
autoclass_content = "class"
autodoc_typehints = "description"
autodoc_class_signature = "separated"
autodoc_default_options = {
    "inherited-members": None,
    "show-inheritance": True,
}
napoleon_google_docstring = True
napoleon_numpy_docstring = False

numfig = True
numfig_format = {"table": "Table %s"}

add_module_names = False

modindex_common_prefix = ["unipotent_lifts."]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
}

# ----------------------------------------------------------------------------------
# Redirects
# ----------------------------------------------------------------------------------

redirects = {
    "pydoc/unipotent_lifts": "./index.html",
}
