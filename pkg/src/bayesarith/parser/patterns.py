"""Compiled regex patterns for requirement and LP text formats."""

import re

# Signed integer; accepts ASCII hyphen and the Unicode minus sign.
_SIGNED = r"[-−]?\d+"

# Requirement literal list
# Example: (-2;3) or (1;-4;7)
REQUIREMENT_PATTERN = re.compile(
    r"^\s*\(\s*(?P<literals>" + _SIGNED + r"(?:\s*;\s*" + _SIGNED + r")*)\s*\)\s*$"
)

# Probability reference inside an equation or objective
# Example: P(2;-3)
PROBABILITY_PATTERN = re.compile(r"P\((?P<literals>[^)]*)\)")

# Native header line
# Example: vars 40 rows 44
HEADER_PATTERN = re.compile(r"^\s*vars\s+(?P<vars>\d+)\s+rows\s+(?P<rows>\d+)\s*$")

# Column name comment
# Example: # x12 = (-2;7)
NAME_PATTERN = re.compile(r"^\s*#\s*x(?P<col>\d+)\s*=\s*(?P<name>\S.*?)\s*$")

# One coefficient*column term
# Example: -1*17 or 1/2*3
TERM_PATTERN = re.compile(r"^(?P<num>[+-]?\d+)(?:/(?P<den>\d+))?\*x?(?P<col>\d+)$")

# Right-hand side of a row
# Example: = 0 or = -3/4
RHS_PATTERN = re.compile(r"^(?P<num>[+-]?\d+)(?:/(?P<den>\d+))?$")
