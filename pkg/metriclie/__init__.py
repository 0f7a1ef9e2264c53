# Copyright (C) 2024 metricLie Working Group
# Author(s): metricLie developers
#
# Disclaimer:
# metricLie is under the LGPL v3 license found in the root directory LICENSE.md
# Everyone is permitted to copy and distribute verbatim copies of this license
# document, but changing it is not allowed.
#
# This version of the GNU Lesser General Public License incorporates the terms
# and conditions of version 3 of the GNU General Public License,
# supplemented by the additional permissions listed below.
#
# Modifications:
#
"""
Init file linking metriclie's modules, classes and functions.
"""
# KEEP THIS FILE AS MINIMAL AS POSSIBLE!

# version file
from .version import __version__

# exception classes
from .exceptions import algebra_exceptions
from .exceptions import catalog_exceptions
from .exceptions import cochain_exceptions
from .exceptions import document_exceptions
from .exceptions.warning_formatting import standard_warning_format
from .exceptions.warning_formatting import only_message_warning_format

# exact linear algebra and results
from .utils.decision import Check, Decision, DecisionKind
from .utils.exactlin import SymForm, Signature, to_rational, signature
from .utils.subspace import Subspace
from .utils.settings import Settings

# algebras
from .algebra.liealg import LieAlgebra, LieModule
from .algebra.metric import MetricLieAlgebra, canonical_isotropic_ideal
from .algebra.metric import decompose, fingerprint, triple_signature
from .algebra.equivar import EquivStructure, GradingKind

# cohomology and extensions
from .cohomology.cochain import Cochain
from .cohomology.qcohom import OrthogonalModule, QuadCocycle, QuadCochain
from .cohomology.qcohom import equivalent
from .cohomology.balanced import is_balanced, admissible
from .extensions.quadext import standard_model, canonical_extension
from .extensions.quadext import extract_cocycle, double_extension

# catalog and applications
from .catalog.basic import CatalogEntry
from .catalog.families import Family, FamilyParams, construct
from .applications.manin import check_manin_pair, manin_pair_build
from .applications.manin import cobracket_from_triple
from .applications.extrinsic import ExtrinsicTriple, check_extrinsic

# documents
from .io.documents import AlgebraData, parse_document, emit_document
