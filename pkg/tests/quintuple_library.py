"""Quintuples covering every normal-subgroup row used by the Goursat tests.

Each entry: (A, A0, B, B0, theta, row covered).
"""

LIBRARY = [
    ("Z(12)", "Z(3)", "Z(8)", "Z(2)", "pow(3)", "Z(k) in Z(kl)"),
    ("Z(5)", "Z(1)", "Z(5)", "Z(1)", "pow(2)", "Z(k) in Z(kl)"),
    ("Z(6)", "Z(6)", "BD(3)", "BD(3)", "id", "full product"),
    ("BD(6)", "Z(4)", "2O", "BD(2)", "id", "Z(2k) in BD(kl)"),
    ("BD(3)", "Z(2)", "2O", "BD(2)", "id", "Z(2k) in BD(kl)"),
    ("BD(4)", "Z(4)", "BD(6)", "Z(6)", "id", "Z(2k) in BD(kl)"),
    ("BD(2)", "Z(2)", "BD(2)", "Z(2)", "id", "Z(2k) in BD(kl)"),
    ("BD(15)", "Z(5)", "BD(3)", "Z(1)", "id", "Z(2k+1) in BD(l(2k+1))"),
    ("BD(9)", "Z(3)", "BD(15)", "Z(5)", "id", "Z(2k+1) in BD(l(2k+1))"),
    ("BD(5)", "Z(5)", "Z(4)", "Z(1)", "id", "Z(2k+1) in BD(2k+1)"),
    ("BD(3)", "Z(3)", "Z(8)", "Z(2)", "pow(3)", "Z(2k+1) in BD(2k+1)"),
    ("BD(3)", "Z(3)", "BD(5)", "Z(5)", "id", "Z(2k+1) in BD(2k+1)"),
    ("BD(4)", "BD(2)", "Z(6)", "Z(3)", "id", "BD(k) in BD(2k)"),
    ("BD(6)", "BD(3)", "2O", "2T", "id", "BD(k) in BD(2k)"),
    ("2T", "Z(2)", "2T", "Z(2)", "id", "Z(2) in 2T"),
    ("2T", "Z(2)", "2T", "Z(2)", "out2T", "Z(2) in 2T"),
    ("2T", "BD(2)", "Z(3)", "Z(1)", "pow(2)", "BD(2) in 2T"),
    ("Z(12)", "Z(4)", "2T", "BD(2)", "pow(2)", "BD(2) in 2T"),
    ("2O", "Z(2)", "2O", "Z(2)", "id", "Z(2) in 2O"),
    ("2O", "BD(2)", "BD(3)", "Z(2)", "id", "BD(2) in 2O"),
    ("2O", "2T", "Z(2)", "Z(1)", "id", "2T in 2O"),
    ("2I", "Z(2)", "2I", "Z(2)", "out2I", "Z(2) in 2I"),
    ("2I", "Z(2)", "2I", "Z(2)", "id", "Z(2) in 2I"),
    ("2I", "2I", "Z(7)", "Z(7)", "id", "full product"),
]
