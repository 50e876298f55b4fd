"""Pure-Python wedge kernels (fallback for the compiled ``_kernels``).

Half-integer indices ``i`` are encoded as integer positions ``p = i + 1/2``.
The basis vector ``v_lambda`` occupies positions ``lambda_k - k + 1`` for
``k = 1, 2, ...``; past the last part these are ``1 - k``.
"""


def positions(parts, count):
    """First ``count`` occupied positions of ``v_parts`` (decreasing)."""
    n = len(parts)
    return [(parts[k] if k < n else 0) - k for k in range(count)]


def _to_parts(pos):
    out = []
    for k, p in enumerate(pos):
        v = p + k
        if v <= 0:
            break
        out.append(v)
    return tuple(out)


def _occupied(p, head, ell):
    return p <= -ell or p in head


def move(parts, src, dst):
    """Apply ``E_{dst-1/2, src-1/2}`` (``src != dst``) to ``v_parts``.

    Returns ``(new_parts, sign)`` or ``None`` when the result vanishes.
    """
    ell = len(parts)
    head = set(p - k for k, p in enumerate(parts))
    if not _occupied(src, head, ell) or _occupied(dst, head, ell):
        return None
    lo, hi = (dst, src) if dst < src else (src, dst)
    between = 0
    for x in range(lo + 1, hi):
        if _occupied(x, head, ell):
            between += 1
    width = ell + abs(src - dst) + 1
    pos = [p for p in positions(parts, width) if p != src]
    pos.append(dst)
    pos.sort(reverse=True)
    return _to_parts(pos), (-1 if between & 1 else 1)


def band_moves(parts, a):
    """Nonzero terms of ``sum_l E_{l-a, l} v_parts`` for ``a != 0``.

    Returns a list of ``(new_parts, sign, src)`` where ``src`` is the
    position of ``l``.
    """
    ell = len(parts)
    width = ell + abs(a)
    pos = positions(parts, width + 1)
    head = set(pos[:ell])
    out = []
    for k in range(width):
        src = pos[k]
        dst = src - a
        if _occupied(dst, head, ell):
            continue
        lo, hi = (dst, src) if dst < src else (src, dst)
        between = 0
        for x in range(lo + 1, hi):
            if _occupied(x, head, ell):
                between += 1
        new = [p for j, p in enumerate(pos) if j != k]
        new.append(dst)
        new.sort(reverse=True)
        out.append((_to_parts(new), -1 if between & 1 else 1, src))
    return out


def diagonal_support(parts):
    """Positions entering the normal-ordered diagonal action on ``v_parts``.

    Returns ``(plus, minus)``: occupied positions with ``l > 0`` and empty
    positions with ``l < 0``.  The eigenvalue of ``sum_l g(l) E_{l,l}`` is
    ``sum g(plus) - sum g(minus)``.
    """
    ell = len(parts)
    pos = positions(parts, ell)
    plus = [p for p in pos if p >= 1]
    head = set(pos)
    minus = [p for p in range(1 - ell, 1) if p not in head]
    return plus, minus


def fn_eigen_scaled(parts, n):
    """``2^n f_n(parts)`` as an exact integer."""
    total = 0
    for k, lam in enumerate(parts, start=1):
        total += (2 * lam - 2 * k + 1) ** n - (1 - 2 * k) ** n
    return total


def hook_position(parts):
    """For a hook ``(a+1, 1^b)`` return ``(src, dst, sign)`` with
    ``E_{dst-1/2, src-1/2} v_empty = sign * v_parts``; ``None`` otherwise.
    """
    if not parts:
        return None
    ell = len(parts)
    if any(p != 1 for p in parts[1:]):
        return None
    # arm a = parts[0]-1, leg b = ell-1
    dst = parts[0]
    src = 1 - ell
    sign = -1 if (ell - 1) & 1 else 1
    return src, dst, sign
