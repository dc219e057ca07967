# Copyright 2026 The qsse Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Stochastic unravelings of GKLS master equations.

The compiled extension carries the full API: GKLS generators and their exact
evolution, dephasing/decay classification, correlated complex noise models,
and stochastic state-vector trajectory ensembles.
"""

from qsse._core import *  # noqa: F401,F403
from qsse._core import __doc__ as _core_doc

__doc__ = _core_doc if _core_doc else __doc__
__version__ = "0.1.0"
