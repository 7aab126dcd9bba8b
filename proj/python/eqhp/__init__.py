# Copyright 2026 The eqhp Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Bredon cohomology of B_{C_n}SU(2): representations, cells, additive
structure and the C_2 ring."""

from ._eqhp import (
    DomainError,
    HomogeneityError,
    ParseError,
    RingElement,
    additive_plot,
    additive_structure,
    cell_plan,
    check_properly_even,
    check_relation,
    evaluate_group,
    fixed_components,
    fixed_dim,
    fixed_dim_formula,
    monomial_basis,
    nu,
    parse,
    point_cohomology,
    probe_injectivity,
    rep_tables,
    run_cli,
)

__version__ = "0.1.0"
