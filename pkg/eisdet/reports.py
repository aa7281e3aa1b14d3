"""Verification reports shared by the determinant identities and the
elliptic-function checks.
"""
from eisdet import msg
from eisdet.utility import rational_str

class Check(object):
    """Outcome of one exact comparison.

    Args:
        mode (str): how the comparison was made, e.g. "series", "symbolic",
          "closed-form" or "kappa-polynomial".
        passed (bool): whether both sides agreed.
        order (int): number of q-coefficients compared, if any.
        weight (int): weight of the compared polynomials, if any.
        first_discrepancy (int): first index where the sides differ.
        detail (str): short human-readable note.
    """
    def __init__(self, mode, passed, order=None, weight=None,
                 first_discrepancy=None, detail=""):
        self.mode = mode
        self.passed = bool(passed)
        self.order = order
        self.weight = weight
        self.first_discrepancy = first_discrepancy
        self.detail = detail

    def to_dict(self):
        return {
            "mode": self.mode,
            "passed": self.passed,
            "order": self.order,
            "weight": self.weight,
            "first_discrepancy": self.first_discrepancy,
            "detail": self.detail
        }

class VerificationReport(object):
    """All checks made for one identity label.

    Args:
        id (str): identity label, e.g. "2.19" or "3.8:z2m".
        description (str): what the identity states.
        constant (fractions.Fraction): constant of the identity as stored in
          the catalog, if it has one.
        checks (list): of :class:`Check`.
        informational (bool): failures are findings, not errors; they do not
          affect the exit code.
        params (dict): extra parameters such as `m`.
    """
    def __init__(self, id, description="", constant=None, checks=None,
                 informational=False, params=None):
        self.id = id
        self.description = description
        self.constant = constant
        self.checks = list(checks or [])
        self.informational = informational
        self.params = dict(params or {})

    @property
    def passed(self):
        """bool: True if there is at least one check and every check passed."""
        return len(self.checks) > 0 and all(c.passed for c in self.checks)

    @property
    def counts(self):
        """bool: True if a failure of this report is a real failure."""
        return not self.informational

    def to_dict(self):
        return {
            "id": self.id,
            "description": self.description,
            "constant": None if self.constant is None else rational_str(self.constant),
            "passed": self.passed,
            "informational": self.informational,
            "params": self.params,
            "checks": [c.to_dict() for c in self.checks]
        }

    def render(self):
        """Prints one colored line per check."""
        label = self.id
        if "m" in self.params:
            label = "{}(m={})".format(self.id, self.params["m"])
        for check in self.checks:
            if check.order is not None:
                where = "order {}".format(check.order)
            elif check.weight is not None:
                where = "weight {}".format(check.weight)
            else:
                where = ""
            if check.first_discrepancy is not None:
                where += "; first difference at {}".format(check.first_discrepancy)
            detail = "; ".join(v for v in (check.mode, where, check.detail) if v)
            msg.verdict(label, check.passed, detail, self.informational)

def all_passed(reports):
    """Returns True if every non-informational report passed."""
    return all(r.passed for r in reports if r.counts)
