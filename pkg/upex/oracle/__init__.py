"""
Brute-force oracle over certificates of extensibility.
"""

from .brute_force import brute_force_decide, project_certificate
from .certificate import Certificate, CheckResult, check_certificate, crossing_edges
from .materialize import materialize_drawing, spread
from .search import CertificateSearch

__all__ = [
    "brute_force_decide",
    "project_certificate",
    "Certificate",
    "CheckResult",
    "check_certificate",
    "crossing_edges",
    "materialize_drawing",
    "spread",
    "CertificateSearch",
]
