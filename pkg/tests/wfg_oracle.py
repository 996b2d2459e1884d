"""Scalar reference implementation of the WFG suite used only by tests.

Written independently of the package: plain floats, explicit per-element
loops, math-module functions. Slow but direct to audit against the
published transformation tables.
"""

import math


def _correct(v):
    return min(1.0, max(0.0, v))


def s_linear(y, a):
    return _correct(abs(y - a) / abs(math.floor(a - y) + a))


def s_decept(y, a, b, c):
    t1 = math.floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b)
    t2 = math.floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b)
    return _correct(1.0 + (abs(y - a) - b) * (t1 + t2 + 1.0 / b))


def s_multi(y, a, b, c):
    t1 = abs(y - c) / (2.0 * (math.floor(c - y) + c))
    t2 = (4.0 * a + 2.0) * math.pi * (0.5 - t1)
    return _correct((1.0 + math.cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0))


def b_flat(y, a, b, c):
    v = (
        a
        + min(0.0, math.floor(y - b)) * a * (b - y) / b
        - min(0.0, math.floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c)
    )
    return _correct(v)


def b_poly(y, alpha):
    return _correct(y**alpha)


def b_param(y, u, a, b, c):
    v = a - (1.0 - 2.0 * u) * abs(math.floor(0.5 - u) + a)
    return _correct(y ** (b + (c - b) * v))


def r_sum(ys, ws):
    return sum(w * y for w, y in zip(ws, ys)) / sum(ws)


def r_nonsep(ys, a):
    n = len(ys)
    num = 0.0
    for j in range(n):
        num += ys[j]
        for k in range(a - 1):
            num += abs(ys[j] - ys[(j + k + 1) % n])
    den = (n / a) * math.ceil(a / 2.0) * (1.0 + 2.0 * a - 2.0 * math.ceil(a / 2.0))
    return num / den


def _groups(t, k, m):
    size = k // (m - 1)
    out = [r_sum(t[j * size : (j + 1) * size], [1.0] * size) for j in range(m - 1)]
    out.append(r_sum(t[k:], [1.0] * len(t[k:])))
    return out


def h_linear(x, m):
    h = []
    for i in range(1, m + 1):
        v = 1.0
        for j in range(1, m - i + 1):
            v *= x[j - 1]
        if i > 1:
            v *= 1.0 - x[m - i]
        h.append(v)
    return h


def h_convex(x, m):
    h = []
    for i in range(1, m + 1):
        v = 1.0
        for j in range(1, m - i + 1):
            v *= 1.0 - math.cos(x[j - 1] * math.pi / 2.0)
        if i > 1:
            v *= 1.0 - math.sin(x[m - i] * math.pi / 2.0)
        h.append(v)
    return h


def h_concave(x, m):
    h = []
    for i in range(1, m + 1):
        v = 1.0
        for j in range(1, m - i + 1):
            v *= math.sin(x[j - 1] * math.pi / 2.0)
        if i > 1:
            v *= math.cos(x[m - i] * math.pi / 2.0)
        h.append(v)
    return h


def h_mixed(x1, alpha, a):
    t = 2.0 * a * math.pi
    return _correct((1.0 - x1 - math.cos(t * x1 + math.pi / 2.0) / t) ** alpha)


def h_disc(x1, alpha, beta, a):
    c = math.cos(a * (x1**beta) * math.pi)
    return _correct(1.0 - (x1**alpha) * c * c)


def _finish(t, m, degenerate_first=False):
    a = [1.0] * (m - 1)
    if degenerate_first:
        a = [1.0] + [0.0] * (m - 2)
    x = [max(t[-1], a[i]) * (t[i] - 0.5) + 0.5 for i in range(m - 1)]
    x.append(t[-1])
    return x


def _assemble(x, h, m):
    return [x[-1] + 2.0 * (i + 1) * h[i] for i in range(m)]


def _normalize(z, n):
    return [z[i] / (2.0 * (i + 1)) for i in range(n)]


def wfg1(z, k, m):
    n = len(z)
    y = _normalize(z, n)
    t = list(y)
    for i in range(k, n):
        t[i] = s_linear(t[i], 0.35)
    for i in range(k, n):
        t[i] = b_flat(t[i], 0.8, 0.75, 0.85)
    t = [b_poly(v, 0.02) for v in t]
    size = k // (m - 1)
    top = []
    for j in range(m - 1):
        block = t[j * size : (j + 1) * size]
        ws = [2.0 * (j * size + i + 1) for i in range(size)]
        top.append(r_sum(block, ws))
    tail_ws = [2.0 * (i + 1) for i in range(k, n)]
    top.append(r_sum(t[k:], tail_ws))
    x = _finish(top, m)
    h = h_convex(x, m)
    h[m - 1] = h_mixed(x[0], 1.0, 5)
    return _assemble(x, h, m)


def _wfg2_groups(z, k, m):
    n = len(z)
    y = _normalize(z, n)
    t = list(y)
    for i in range(k, n):
        t[i] = s_linear(t[i], 0.35)
    merged = t[:k]
    for i in range((n - k) // 2):
        merged.append(r_nonsep(t[k + 2 * i : k + 2 * i + 2], 2))
    return _groups(merged, k, m)


def wfg2(z, k, m):
    x = _finish(_wfg2_groups(z, k, m), m)
    h = h_convex(x, m)
    h[m - 1] = h_disc(x[0], 1.0, 1.0, 5)
    return _assemble(x, h, m)


def wfg3(z, k, m):
    x = _finish(_wfg2_groups(z, k, m), m, degenerate_first=True)
    return _assemble(x, h_linear(x, m), m)


def wfg4(z, k, m):
    y = _normalize(z, len(z))
    t = [s_multi(v, 30.0, 10.0, 0.35) for v in y]
    x = _finish(_groups(t, k, m), m)
    return _assemble(x, h_concave(x, m), m)


def wfg5(z, k, m):
    y = _normalize(z, len(z))
    t = [s_decept(v, 0.35, 0.001, 0.05) for v in y]
    x = _finish(_groups(t, k, m), m)
    return _assemble(x, h_concave(x, m), m)


def wfg6(z, k, m):
    n = len(z)
    y = _normalize(z, n)
    t = list(y)
    for i in range(k, n):
        t[i] = s_linear(t[i], 0.35)
    size = k // (m - 1)
    top = [r_nonsep(t[j * size : (j + 1) * size], size) for j in range(m - 1)]
    top.append(r_nonsep(t[k:], n - k))
    x = _finish(top, m)
    return _assemble(x, h_concave(x, m), m)


def wfg7(z, k, m):
    n = len(z)
    y = _normalize(z, n)
    t = list(y)
    for i in range(k):
        u = r_sum(y[i + 1 :], [1.0] * (n - i - 1))
        t[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
    for i in range(k, n):
        t[i] = s_linear(t[i], 0.35)
    x = _finish(_groups(t, k, m), m)
    return _assemble(x, h_concave(x, m), m)


def wfg8(z, k, m):
    n = len(z)
    y = _normalize(z, n)
    t = list(y)
    for i in range(k, n):
        u = r_sum(y[:i], [1.0] * i)
        t[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
    for i in range(k, n):
        t[i] = s_linear(t[i], 0.35)
    x = _finish(_groups(t, k, m), m)
    return _assemble(x, h_concave(x, m), m)


def wfg9(z, k, m):
    n = len(z)
    y = _normalize(z, n)
    t = list(y)
    for i in range(n - 1):
        u = r_sum(y[i + 1 :], [1.0] * (n - i - 1))
        t[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0)
    for i in range(k):
        t[i] = s_decept(t[i], 0.35, 0.001, 0.05)
    for i in range(k, n):
        t[i] = s_multi(t[i], 30.0, 95.0, 0.35)
    size = k // (m - 1)
    top = [r_nonsep(t[j * size : (j + 1) * size], size) for j in range(m - 1)]
    top.append(r_nonsep(t[k:], n - k))
    x = _finish(top, m)
    return _assemble(x, h_concave(x, m), m)


ORACLES = {
    "wfg1": wfg1,
    "wfg2": wfg2,
    "wfg3": wfg3,
    "wfg4": wfg4,
    "wfg5": wfg5,
    "wfg6": wfg6,
    "wfg7": wfg7,
    "wfg8": wfg8,
    "wfg9": wfg9,
}
