"""
Common util functions and error types
"""

import sys

class DomainError(ValueError):
    """
    Argument outside the domain of an operation
    """
    pass

class RangeError(DomainError):
    """
    Linear-scale value not representable as a finite, normal double

    kind is "underflow" or "overflow"
    """
    def __init__(self, msg, kind):
        DomainError.__init__(self, msg)
        self.kind = kind

def WARNING(msg):
    sys.stderr.write(msg.strip()+"\n")

def ERROR(msg):
    sys.stderr.write(msg.strip()+"\n")
    sys.exit(1)

def MSG(msg, debug=False):
    if debug:
        sys.stderr.write(msg.strip()+"\n")
