"""Printed semidirect-product and coproduct tables, stored verbatim.

Keys `muN`/`deltaN` are the 8-dimensional tables, `psiN`/`dpsiN` the
10-dimensional ones. Lines are kept exactly as printed, repeated keys and
malformed wedges included; catalog.notation reads them and catalog.ledger
classifies every disagreement with the computed structures.
"""

TABLES: dict[str, str] = {
    "mu1": """
    x2 x3 x4 = x1
    x2 x3 x1* = -x4*
    x2 x4 x1* = x3*
    x3 x4 x1* = -x2*
""",
    "delta1": """
    x1* = x2*^x4*^x3*
    x2 = x1^x3*^x4*
    x3 = x1^x4*^x2*
    x4 = x1^x2*^x3*
    x2* = x3* = x4* = x1 = 0
""",
    "mu2": """
    x1 x2 x3 = x1
    x1 x2 x1* = -x3*
    x2 x3 x1* = -x1*
    x1 x3 x1* = x2*
""",
    "delta2": """
    x1* = x1*^x3*^x2*
    x1 = x1^x2*^x3*
    x2 = x1^x3*^x1
    x3 = x1^x1*^x2*
    x4 = x2* = x3* = x4* = 0
""",
    "mu3": """
    x2 x3 x4 = x1
    x1 x3 x4 = x2
    x2 x3 x1* = -x4*
    x3 x4 x1* = -x2*
    x2 x4 x1* = x3*
    x1 x3 x2* = -x4*
    x1 x4 x2* = x3*
    x3 x4 x2* = -x1*
""",
    "delta3": """
    x1* = x2*^x4*^x3*
    x2* = x1*^x4*^x3*
    x1 = x2^x3*^x4*
    x2 = x1^x3*^x4*
    x3 = x1^x4*^x2* + x2^x4*^x1*
    x4 = x1^x2*^x3* + x1*^x3*^x2
    x3* = x4* = 0
""",
    "mu4": """
    x2 x3 x4 = alpha x1 + x2
    x1 x3 x4 = x2
    x2 x3 x1* = -alpha x4*
    x2 x3 x2* = -x4*
    x2 x4 x1* = alpha x3*
    x2 x4 x2* = x3*
    x3 x4 x1* = -alpha x2*
    x3 x4 x2* = -x1* - x2*
    x1 x3 x2* = -x4*
    x1 x4 x2* = x3*
""",
    "delta4": """
    x1* = alpha x3*^x2*^x4*
    x2* = x1*^x4*^x3* + x2*^x4*^x3*
    x1 = x2^x3*^x4*
    x2 = alpha x1^x3*^x4* + x3*^x4*^x2
    x3 = alpha x1^x4*^x2* + x2^x4*^x2* + x1*^x2^x4*
    x4 = alpha x1^x2*^x3* + x2^x2*^x3* + x1*^x3*^x2
    x3* = x4* = 0
""",
    "mu5": """
    x1 x3 x4 = x1
    x2 x3 x4 = x2
    x1 x3 x1* = -x4*
    x1 x4 x1* = x3*
    x3 x4 x1* = -x1*
    x2 x3 x2* = -x4*
    x2 x4 x2* = x3*
    x3 x4 x2* = -x2*
""",
    "delta5": """
    x1* = x1*^x4*^x3*
    x2* = x2*^x4*^x3*
    x1 = x1^x3*^x4*
    x2 = x2^x3*^x4*
    x3 = x1^x4*^x1* + x2^x4*^x2*
    x4 = x1^x1*^x3* + x2^x2*^x3*
    x3* = x4* = 0
""",
    "mu6": """
    x2 x3 x4 = x1
    x1 x3 x4 = x2
    x1 x2 x4 = x3
    x2 x3 x1* = -x4*
    x3 x4 x1* = -x2*
    x2 x4 x1* = x3*
    x1 x3 x2* = -x4*
    x1 x4 x2* = x3*
    x3 x4 x2* = -x1*
    x1 x2 x3* = -x4*
    x1 x4 x3* = x2*
    x2 x4 x3* = -x1*
""",
    "delta6": """
    x1* = x2*^x4*^x3*
    x2* = x1*^x4*^x3*
    x3* = x1*^x4*^x2*
    x1 = x2^x3*^x4* + x2*^x4*^x3
    x2 = x1^x3*^x4* + x4*^x1*^x3
    x3 = x4*^x2*^x1 + x4*^x1*^x2
    x4 = x1*^x3*^x2 + x1*^x2*^x3 + x1^x2*^x3*
    x4* = 0
""",
    "mu7": """
    x2 x3 x4 = -x2
    x1 x3 x4 = x1
    x1 x2 x3 = x3
    x1 x2 x4 = -x4
    x2 x3 x2* = x4*
    x3 x4 x2* = x2*
    x2 x4 x2* = -x3*
    x1 x3 x1* = -x4*
    x3 x4 x1* = -x1*
    x1 x4 x1* = x3*
    x1 x2 x3* = -x3*
    x1 x3 x3* = x2*
    x2 x3 x3* = -x1*
    x1 x2 x4* = x4*
    x1 x4 x4* = -x2*
    x2 x4 x4* = x1*
""",
    "delta7": """
    x1* = x1*^x4*^x3*
    x2* = x2*^x3*^x4*
    x3* = x1*^x3*^x2*
    x4* = x1*^x2*^x4*
    x1 = x1^x3*^x4* + x2*^x3*^x3 + x4*^x2*^x4
    x2 = x2^x4*^x3* + x3*^x1*^x3 + x1*^x4*^x4
    x3 = x4*^x1*^x1 + x2*^x4*^x2 + x1*^x2*^x3
    x4 = x3*^x2*^x2 + x1*^x3*^x1 + x4^x2*^x1*
    x4* = 0
""",
    "psi1": """
    x2 x3 x4 = x1
    x2 x3 x1* = -x4*
    x3 x4 x1* = -x2*
    x2 x4 x1* = x3*
""",
    "dpsi1": """
    x1* = x2*^x4*^x3*
    x2 = x1^x3*^x4*
    x3 = x1^x4*^x2*
    x4 = x1^x2*^x3*
    x2* = x5 = x3* = 0
    x4* = x5* = x1 = 0
""",
    "psi2": """
    x2 x3 x4 = x1
    x3 x4 x5 = x2
    x2 x3 x1* = -x4*
    x2 x4 x1* = x3*
    x3 x4 x1* = -x2*
    x3 x4 x2* = -x5*
    x4 x5 x2* = -x3*
    x3 x5 x2* = x4*
""",
    "dpsi2": """
    x1* = x2*^x4*^x3*
    x2* = x3*^x5*^x4*
    x2 = x1^x3*^x4*
    x3 = x1^x4*^x2* + x2^x4*^x5*
    x4 = x1^x2*^x3* + x5*^x3*^x2
    x5 = x2^x3*^x4*
    x3* = x4* = x5* = x1 = 0
""",
    "psi3": """
    x2 x3 x4 = x1
    x2 x4 x5 = x2
    x1 x4 x5 = x1
    x2 x3 x1* = -x4*
    x2 x4 x1* = x3*
    x3 x4 x1* = -x2*
    x2 x4 x2* = -x5*
    x2 x5 x2* = x4*
    x4 x5 x2* = -x2*
    x1 x4 x1* = -x5*
    x4 x5 x1* = -x1*
    x1 x5 x1* = x4*
""",
    "dpsi3": """
    x1* = x1*^x5*^x4* + x2*^x4*^x3*
    x2* = x2*^x5*^x4*
    x1 = x1^x4*^x5*
    x2 = x1^x3*^x4* + x2^x4*^x5*
    x3 = x1^x4*^x2*
    x4 = x1^x2*^x3* + x2^x5*^x2* + x5*^x1*^x1
    x5 = x2*^x4*^x2 + x1*^x4*^x1
    x3* = x4* = x5* = 0
""",
    "psi4": """
    x2 x3 x4 = alpha x1 + x2
    x1 x3 x4 = x2
    x2 x4 x5 = x2
    x1 x4 x5 = x1
    x2 x3 x1* = -alpha x4*
    x2 x4 x1* = alpha x3*
    x3 x4 x1* = -alpha x2*
    x2 x3 x2* = -x4*
    x2 x4 x2* = x3*
    x3 x4 x2* = -x2*
    x1 x3 x2* = -x4*
    x1 x4 x2* = x3*
    x3 x4 x2* = -x1*
    x2 x4 x2* = -x5*
    x4 x5 x2* = -x2*
    x2 x5 x2* = x4*
    x1 x4 x1* = -x5*
    x4 x5 x1* = -x1*
    x1 x5 x1* = x4*
""",
    "dpsi4": """
    x1* = x1*^x5*^x4* + alpha x2*^x4*^x3*
    x2* = x2*^x4*^x3* + x1*^x4*^x3* + x2*^x5*^x4*
    x1 = x2^x3*^x4* + x1^x4*^x5*
    x2 = alpha x1^x3*^x4* + x2^x3*^x4* + x2^x4*^x5*
    x3 = alpha x1^x4*^x2* + x2^x4*^x2* + x2^x4*^x1*
    x4 = alpha x1^x2*^x3* + x2^x2*^x3* + x1*^x3*^x2 + x5*^x2*^x2 + x5*^x1*^x1
    x5 = x2*^x4*^x2 + x1*^x4*^x1
    x3* = x4* = x5* = 0
""",
    "psi5": """
    x2 x3 x4 = alpha x1 + x2
    x1 x3 x4 = x2
    x2 x3 x1* = -alpha x4*
    x3 x4 x1* = -alpha x2*
    x2 x4 x1* = alpha x3*
    x2 x3 x2* = -x4*
    x2 x4 x2* = x3*
    x3 x4 x2* = -x2* - x1*
    x1 x3 x2* = -x4*
    x1 x4 x2* = x3*
""",
    "dpsi5": """
    x1* = alpha x2*^x4*^x3*
    x2* = x1*^x4*^x3* + x2*^x4*^x3*
    x1 = alpha x2^x3*^x4*
    x2 = x1^x3*^x4* + x2^x3*^x4*
    x3 = x1*^x2^x4* + x2^x4*^x2* + alpha x1^x4*^x2*
    x4 = x1*^x3*^x2 + alpha x1^x2*^x3* + x2^x2*^x3*
    x3* = x4* = 0
    x5* = x5 = 0
""",
    "psi6": """
    x2 x3 x4 = x1
    x1 x3 x4 = x2
    x2 x4 x5 = x2
    x1 x4 x5 = x1
    x2 x3 x1* = -x4*
    x2 x4 x1* = x3*
    x3 x4 x1* = -x2*
    x1 x3 x2* = -x4*
    x3 x4 x2* = -x1*
    x1 x4 x2* = x3*
    x2 x4 x2* = -x5*
    x4 x5 x2* = -x2*
    x2 x5 x2* = x4*
    x1 x4 x1* = -x5*
    x4 x5 x1* = -x1*
    x1 x5 x2* = x4*
""",
    "dpsi6": """
    x1* = x2*^x4*^x3* + x1*^x5*^x4*
    x2* = x1*^x4*^x3* + x2*^x5*^x4*
    x1 = x1^x4*^x5* + x2^x3*^x4*
    x2 = x1^x3*^x4* + x2^x4*^x5*
    x3 = x1^x4*^x2* + x2^x4*^x1*
    x4 = x1^x2*^x3* + x2^x1*^x3* + x5*^x2*^x2 + x5*^x1*^x1
    x5 = x2*^x4*^x2 + x1*^x4*^x1
    x3* = x4* = x5* = 0
""",
    "psi7": """
    x2 x3 x4 = x1
    x2 x4 x5 = x2
    x3 x4 x5 = x3
    x2 x3 x1* = -x4*
    x2 x4 x1* = x3*
    x3 x4 x1* = -x2*
    x2 x4 x2* = -x5*
    x4 x5 x2* = -x2*
    x2 x5 x2* = x4*
    x3 x4 x3* = -x5*
    x4 x5 x3* = -x3*
    x3 x5 x3* = x4*
""",
    "dpsi7": """
    x1* = x2*^x4*^x3*
    x2* = x2*^x5*^x4*
    x3* = x3*^x5*^x4*
    x2 = x1^x3*^x4* + x2^x4*^x5*
    x3 = x1^x4*^x2* + x3^x4*^x5*
    x4 = x1^x2*^x3* + x2^x5*^x2* + x3^x5*^x3*
    x5 = x2^x2*^x4* + x3^x3*^x4*
    x4* = x5* = x1 = 0
""",
    "psi8": """
    x2 x3 x4 = x2
    x1 x3 x4 = x1
    x1 x3 x1* = -x4*
    x1 x4 x1* = x3*
    x3 x4 x1* = -x1*
    x2 x3 x2* = -x4*
    x2 x4 x2* = x3*
    x3 x4 x2* = -x2*
""",
    "dpsi8": """
    x1* = x1*^x4*^x3*
    x1 = x1^x3*^x4*
    x2 = x2^x3*^x4*
    x3 = x1^x4*^x1* + x2^x4*^x2*
    x4 = x1^x1*^x3* + x2^x2*^x3*
    x2* = x2*^x4*^x3*
    x3* = x4* = 0
    x5* = x5 = 0
""",
    "psi9": """
    x2 x3 x4 = x1
    x3 x4 x5 = x3 + alpha x2
    x2 x4 x5 = x3
    x1 x4 x5 = x1
    x2 x3 x1* = -x4*
    x2 x4 x1* = x3*
    x3 x4 x1* = -x2*
    x3 x4 x3* = -x5*
    x4 x5 x3* = -x3*
    x3 x5 x3* = x4*
    x3 x4 x2* = -alpha x5*
    x4 x5 x2* = -alpha x3*
    x3 x5 x2* = alpha x4*
    x2 x4 x3* = -x5*
    x4 x5 x3* = -x2*
    x2 x5 x3* = x4*
    x1 x4 x1* = -x5*
    x4 x5 x1* = -x1*
    x1 x5 x1* = x4*
""",
    "dpsi9": """
    x1* = x3*^x2*^x4* + x4*^x1*^x5*
    x2* = alpha x4*^x3*^x5*
    x3* = x4*^x3*^x5* + x4*^x2*^x5*
    x1 = x1^x4*^x5*
    x2 = x1^x3*^x4* + x3^x4*^x5*
    x3 = x1^x4*^x2* + alpha x2^x4*^x5* + x3^x4*^x5*
    x4 = x1^x2*^x3* + x3^x5*^x3* + alpha x2^x5*^x3* + x3^x5*^x2* + x1^x5*^x1*
    x5 = x3*^x4*^x3 + alpha x3*^x4*^x2 + x2*^x4*^x3 + x1*^x4*^x1
    x4* = x5* = 0
""",
    "psi10": """
    x2 x3 x4 = x1
    x3 x4 x5 = x3
    x2 x4 x5 = x2
    x1 x4 x5 = 2 x2
    x2 x3 x1* = -x4*
    x3 x4 x1* = -x2*
    x2 x4 x1* = x3*
    x3 x4 x3* = -x5*
    x4 x5 x3* = -x3*
    x3 x5 x3* = x4*
    x2 x4 x2* = -x5*
    x4 x5 x2* = -x2*
    x2 x5 x2* = x4*
    x1 x4 x2* = -2 x5*
    x4 x5 x2* = -2 x1*
    x1 x5 x2* = 2 x4*
""",
    "dpsi10": """
    x1* = x3*^x2*^x4*
    x2* = x4*^x2*^x5* + 2 x4*^x1*^x5*
    x3* = x4*^x3*^x5*
    x1 = 2 x2^x4*^x5*
    x2 = x1^x3*^x4* + x2^x4*^x5*
    x3 = x1^x4*^x2* + x3^x4*^x5*
    x4 = x1^x2*^x3* + x3^x5*^x3* + x2^x5*^x2* + 2 x2^x5*^x1*
    x5 = x3^x3*^x4* + x2^x2*^x4* + 2 x2^x1*^x4*
    x4* = x5* = 0
""",
    "psi11": """
    x2 x3 x4 = x1
    x1 x3 x4 = x2
    x1 x2 x4 = x3
    x2 x3 x1* = -x4*
    x3 x4 x1* = -x2*
    x2 x4 x1* = x3*
    x1 x3 x2* = -x4*
    x3 x4 x2* = -x1*
    x1 x4 x2* = x3*
    x1 x4 x3* = x2*
    x1 x2 x3* = -x4*
    x2 x4 x3* = -x1*
""",
    "dpsi11": """
    x1* = x3*^x2*^x4*
    x2* = x3*^x1*^x4*
    x3* = x2*^x1*^x4*
    x1 = x2^x3*^x4* + x3^x2*^x4*
    x2 = x1^x3*^x4* + x3^x4*^x1*
    x3 = x1^x4*^x2* + x2^x4*^x1*
    x4 = x1^x2*^x3* + x2^x1*^x3* + x3^x1*^x2*
    x4* = x5* = 0
    x5 = 0
""",
    "psi12": """
    x1 x2 x5 = x1
    x2 x4 x5 = x3
    x3 x4 x5 = beta x2 + (1+beta) x3
    x1 x4 x1* = -x5*
    x4 x5 x1* = -x1*
    x1 x5 x1* = x4*
    x2 x4 x3* = -x5*
    x4 x5 x3* = -x2*
    x2 x5 x3* = x4*
    x3 x4 x2* = -beta x5*
    x4 x5 x2* = -beta x3*
    x3 x5 x2* = beta x4*
    x3 x4 x3* = -(1+beta) x5*
    x4 x5 x3* = -(1+beta) x3*
    x3 x5 x3* = (1+beta) x4*
""",
    "dpsi12": """
    x1* = x4*^x1*^x5*
    x2* = beta x4*^x3*^x5*
    x3* = x4*^x2*^x5* + (1+beta) x4*^x3*^x5*
    x1 = x1^x4*^x5*
    x2 = x3^x4*^x5*
    x3 = beta x2^x4*^x5* + (1+beta) x3^x4*^x5*
    x4 = x1^x5*^x1* + x3^x5*^x2* + beta x2^x5*^x3* + (1+beta) x3^x5*^x3*
    x5 = x1^x1*^x4* + x3^x2*^x4* + beta x2^x3*^x4* + (1+beta) x3^x3*^x4*
    x4* = x5* = 0
""",
    "psi13": """
    x1 x4 x5 = x1
    x2 x4 x5 = x2
    x3 x4 x5 = x3
    x1 x4 x1* = -x5*
    x4 x5 x1* = -x1*
    x1 x5 x1* = x4*
    x2 x4 x2* = -x5*
    x4 x5 x2* = -x2*
    x2 x5 x2* = x4*
    x3 x4 x3* = -x5*
    x4 x5 x3* = -x3*
    x3 x5 x3* = x4*
""",
    "dpsi13": """
    x1* = x4*^x1*^x5*
    x2* = x4*^x2*^x5*
    x3* = x4*^x3*^x5*
    x1 = x1^x4*^x5*
    x2 = x2^x4*^x5*
    x3 = x3^x4*^x5*
    x4 = x5*^x1*^x1 + x5*^x2*^x2 + x5*^x3*^x3
    x5 = x1*^x4*^x1 + x2*^x4*^x2 + x3*^x4*^x3
    x4* = x5* = 0
""",
    "psi14": """
    x1 x4 x5 = x2
    x2 x4 x5 = x3
    x3 x4 x5 = s x1 + t x2 + u x3
    x1 x4 x2* = -x5*
    x4 x5 x2* = -x1*
    x1 x5 x2* = x4*
    x2 x4 x3* = -x5*
    x4 x5 x3* = -x2*
    x2 x5 x3* = x4*
    x3 x4 x1* = -s x5*
    x4 x5 x1* = -s x3*
    x3 x5 x1* = s x4*
    x3 x4 x2* = -t x5*
    x4 x5 x2* = -t x3*
    x3 x5 x2* = t x4*
    x3 x4 x3* = -u x5*
    x4 x5 x3* = -u x3*
    x3 x5 x3* = u x4*
""",
    "dpsi14": """
    x1* = s x4*^x3*^x5*
    x2* = x4*^x1*^x5* + t x4*^x3*^x5*
    x3* = x4*^x2*^x5* + u x4*^x3*^x5*
    x1 = x2^x4*^x5*
    x2 = x3^x4*^x5*
    x3 = s x1^x4*^x5* + t x2^x4*^x5* + u x3^x4*^x5*
    x4 = x2^x5*^x1* + x3^x5*^x2* + s x1^x5*^x3* + t x2^x5*^x3* + u x3^x5*^x3*
    x5 = x2^x1*^x4* + x3^x2*^x4* + s x1^x3*^x4* + t x2^x3*^x4* + u x3^x3*^x4*
    x4* = x5* = 0
""",
    "psi15": """
    x2 x3 x4 = x1
    x1 x3 x4 = x2
    x2 x3 x1* = -x4*
    x3 x4 x1* = -x2*
    x2 x4 x1* = x3*
    x1 x3 x2* = -x4*
    x3 x4 x2* = -x1*
    x1 x4 x2* = x3*
""",
    "dpsi15": """
    x1* = x2*^x4*^x3*
    x2* = x1*^x4*^x3*
    x1 = x2^x3*^x4*
    x2 = x1^x3*^x4*
    x3 = x1^x4*^x2* + x1*^x2^x4*
    x4 = x1^x2*^x3* + x1*^x3*^x2
    x3* = x4* = 0
    x5 = x5* = 0
""",
    "psi16": """
    x2 x3 x4 = -x2
    x1 x3 x4 = x1
    x1 x2 x3 = x3
    x1 x2 x4 = -x4
    x2 x3 x2* = x4*
    x3 x4 x2* = x2*
    x2 x4 x2* = -x3*
    x1 x3 x1* = -x4*
    x3 x4 x1* = -x1*
    x1 x4 x1* = x3*
    x1 x2 x3* = -x3*
    x1 x3 x3* = x2*
    x2 x3 x3* = -x1*
    x1 x2 x4* = x4*
    x1 x4 x4* = -x2*
    x2 x4 x4* = x1*
""",
    "dpsi16": """
    x1* = x1*^x4*^x3*
    x2* = x2*^x3*^x4*
    x3* = x1*^x3*^x2*
    x4* = x1*^x2*^x4*
    x1 = x1^x3*^x4* + x2*^x3*^x3 + x4*^x2*^x4
    x2 = x3^x3*^x1* + x4*^x3*^x2 + x4^x1*^x4*
    x3 = x1*^x2*^x3 + x2*^x4*^x2 + x4*^x1*^x1
    x4 = x1*^x4^x2* + x1^x1*^x3* + x2^x3*^x2*
    x5* = x5 = 0
""",
    "psi17": """
    x1 x2 x3 = x1
    x1 x2 x1* = -x3*
    x2 x3 x1* = -x1*
    x1 x3 x1* = x2*
""",
    "dpsi17": """
    x1* = x1*^x3*^x2*
    x1 = x1^x2*^x3*
    x2 = x3*^x1*^x1
    x3 = x1*^x2*^x1
    x2* = x3* = x4* = 0
    x5* = x4 = x5 = 0
""",
}
