"""Independent numpy/scipy oracle for the frozen fixtures in tests/.

Run: python3 tests/oracles/fixtures.py
Nothing here is imported by the C++ build; values printed are pasted into
tests/fixtures.hpp.
"""
import itertools

import numpy as np
import scipy.linalg as sl


def basis_index(bits):
    return int("".join(map(str, bits)), 2)


def exchange(i, j, n):
    dim = 2**n
    m = np.zeros((dim, dim))
    for col in range(dim):
        b = [(col >> (n - 1 - k)) & 1 for k in range(n)]
        b[i - 1], b[j - 1] = b[j - 1], b[i - 1]
        m[basis_index(b), col] = 1
    return m


C = -0.5 + 1j / (2 * np.sqrt(3))
P12, P13, P23 = exchange(1, 2, 3), exchange(1, 3, 3), exchange(2, 3, 3)
U = P12 @ P23


def three_spin_h(t=1.0):
    # c multiplies P13.P23 and c* multiplies P23.P13 (exact log of P12.P23)
    return (2 * np.pi / (3 * t)) * (np.eye(8) + np.conj(C) * P23 @ P13 + C * P13 @ P23)


SIG = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.array([[1, 0], [0, -1]]),
}


def pauli_dense(s):
    out = np.array([[1.0 + 0j]])
    for ch in s:
        out = np.kron(out, SIG[ch])
    return out


def main():
    h = three_spin_h()
    print("exp(-iH) vs U:", abs(sl.expm(-1j * h) - U).max())
    print("logm check:", abs(1j * sl.logm(U) - h).max())

    print("\n# Pauli expansion of three-spin H (T=1)")
    for letters in itertools.product("IXYZ", repeat=3):
        s = "".join(letters)
        coef = np.trace(pauli_dense(s) @ h) / 8
        if abs(coef) > 1e-14:
            print(f'{{"{s}", {coef.real:.17g}, {coef.imag:.17g}}},')

    print("\n# Hamiltonian leakage, source |up,down,up> (index 2), T=1")
    for eps in (1e-2, 1e-1):
        u = sl.expm(-1j * h * (1 + eps))
        col = u[:, 2]
        p = np.abs(col) ** 2
        print(f"eps={eps}: dominant={p.argmax()} leakage={1 - p.max():.17g}")

    print("\n# Truncated BCH gap: || i^2 exp(Z_k) - P12 P23 ||_max")
    x = -1j * np.pi / 2 * P12
    y = -1j * np.pi / 2 * P23

    def com(a, b):
        return a @ b - b @ a

    terms = [
        x + y,
        0.5 * com(x, y),
        (com(x, com(x, y)) + com(y, com(y, x))) / 12,
        -com(y, com(x, com(x, y))) / 24,
    ]
    for order in (1, 2, 3, 4):
        z = sum(terms[:order])
        gap = abs(-sl.expm(z) - U).max()
        print(f"order {order}: {gap:.17g}")

    print("\n# chain 12,23,34 on 4 spins, eigenvalues / (2 pi), T=1")
    u4 = exchange(1, 2, 4) @ exchange(2, 3, 4) @ exchange(3, 4, 4)
    ev = np.linalg.eigvals(u4)
    theta = np.mod(-np.angle(ev), 2 * np.pi)
    theta[theta > 2 * np.pi - 1e-9] = 0
    print(sorted(np.round(theta / (2 * np.pi), 12)))

    print("\n# swapped coupling (c <-> c*): gap of the product identity")
    hc = np.conj(h)
    print(abs(sl.expm(-1j * hc) - U).max(), "equals U^dagger:", abs(sl.expm(-1j * hc) - U.T).max())


if __name__ == "__main__":
    main()
