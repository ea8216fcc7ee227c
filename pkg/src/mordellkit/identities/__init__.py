"""Identity registry and verifier."""

from .model import Estimate, IdentityRecord, Param, VerificationOutcome
from .registry import RECORDS, fresnel, phi, psi
from .verify import IdentitySummary, evaluate_side, get_record, list_identities, verify

__all__ = [
    "Estimate", "IdentityRecord", "Param", "VerificationOutcome",
    "RECORDS", "fresnel", "phi", "psi",
    "IdentitySummary", "evaluate_side", "get_record", "list_identities", "verify",
]
