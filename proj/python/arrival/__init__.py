# Copyright 2026 The Arrival Authors
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
"""Python access to the ARRIVAL solver core.

Vertices are ints; destinations are the strings "D0" and "D1". Flows are
lists of ints indexed by edge slot, in the order of ``Instance.edges()``.
"""

import json

from arrival._core import (
    ArrivalError,
    CertificateError,
    DisagreementError,
    FvsRefusal,
    Instance,
    ValidationError,
    check_flow,
    generate,
    multi_run,
    run,
)
from arrival import _core

__all__ = [
    "ArrivalError",
    "CertificateError",
    "DisagreementError",
    "FvsRefusal",
    "Instance",
    "ValidationError",
    "check_flow",
    "decide",
    "fvs",
    "generate",
    "multi_run",
    "phi_set",
    "run",
]


def decide(instance, method="sim", phi=None, kmax=6, tarski="recursive-binary"):
    """Decides ``instance`` with ``method`` in {"sim", "subexp", "fvs"}.

    Returns the JSON summary as a dict with the certificate flow added under
    "certificate". ``phi`` is a string such as "1/2" or "0.25".
    """
    summary, certificate = _core._decide(instance, method, phi, kmax, tarski)
    out = json.loads(summary)
    out["certificate"] = certificate
    return out


def phi_set(instance, phi=None):
    return json.loads(_core._phi_set(instance, phi))


def fvs(instance, kmax=6):
    """Minimum feedback vertex set, or None when larger than ``kmax``."""
    text = _core._fvs(instance, kmax)
    return None if text is None else json.loads(text)
