"""
The chain of checked claims behind the report command.
"""

from .claims import CLAIMS, Claim, ClaimStatus, run_claims

__all__ = [
    "CLAIMS",
    "Claim",
    "ClaimStatus",
    "run_claims",
]
