"""Independent high-precision values frozen into the C++ unit tests.

Run with `python tests/oracles.py`; every printed value appears verbatim in
a test file.  Uses mpmath only, none of the library code.
"""
import mpmath as mp

mp.mp.dps = 30


def H(z):
    if abs(z) < mp.mpf("0.1"):
        # log|1 - z| + Re z cancels for small z; use -Re sum_{k>=2} z^k / k
        return -mp.re(mp.nsum(lambda k: z**k / k, [2, mp.inf]))
    return mp.log(abs(1 - z)) + mp.re(z)


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 20)}")


# counting_mu for |x|^(1/2) dx on [-1, 1] at r = 1
show("counting_mu sqrt density", mp.quad(lambda x: mp.sqrt(abs(x)), [-1, 0, 1]))

# max over theta of H(e^{i theta} / 2): single atom at 2, r = 1
f = lambda t: H(mp.expj(t) / 2)
grid = [mp.pi * k / 2000 for k in range(2001)]
t0 = max(grid, key=f)
tmax = mp.findroot(lambda t: mp.diff(f, t), t0)
show("max_modulus atom 2 theta", tmax)
show("max_modulus atom 2 value", f(tmax))

# T(r, u_p) at r = 1, p = 1.5
p = mp.mpf("1.5")
show("T u_p p=1.5", mp.quad(lambda t: max(mp.cos(p * (mp.pi / 2 - abs(t))), 0), [-mp.pi, -mp.pi/2 - mp.pi/(2*p), -mp.pi/2 + mp.pi/(2*p), mp.pi/2 - mp.pi/(2*p), mp.pi/2 + mp.pi/(2*p), mp.pi]) / (2 * mp.pi))

# c_p from the jump of the normal derivative of u_p across R at x = 0.7
up = lambda x, y: mp.power(abs(mp.mpc(x, y)), p) * mp.cos(p * (mp.pi / 2 - abs(mp.arg(mp.mpc(x, y)))))
x = mp.mpf("0.7")
jump = mp.diff(lambda y: up(x, y), 0, direction=1) - mp.diff(lambda y: up(x, y), 0, direction=-1)
show("c_p p=1.5 (jump / (2 pi x^(p-1)))", jump / (2 * mp.pi * x ** (p - 1)))

# Hilbert transform (1/pi) p.v. int h(t) / (t - x) dt of the standard bump at x = 0.5
bump = lambda t: mp.exp(-1 / (1 - t * t)) if abs(t) < 1 else mp.mpf(0)
xh = mp.mpf("0.5")
pv = mp.quad(lambda t: (bump(t) - bump(xh)) / (t - xh), [-1, xh, 1]) + bump(xh) * mp.log((1 - xh) / (1 + xh))
show("hilbert bump x=0.5", pv / mp.pi)
show("hilbert bump x=3", mp.quad(lambda t: bump(t) / (t - 3), [-1, 1]) / mp.pi)

# delta* for delta(t) = t 1_[1,2](t)
def dstar(r):
    r = mp.mpf(r)
    lo = mp.quad(lambda t: t / t**2, [1, min(2, r)]) if r > 1 else 0
    hi = mp.quad(lambda t: t / t**3 * (1 + mp.log(t / r)), [max(1, r), 2]) if r < 2 else 0
    return r * lo + r * r * hi
for r in ("0.5", "1.5", "3"):
    show(f"delta_star r={r}", dstar(r))

# Tsuji T and m of a single atom at zeta = 0.4 - 1.1i (mass 1) at r = 2,
# split at the sign changes of the integrand and at the angle nearest zeta
zeta = mp.mpc("0.4", "-1.1")
def tsuji(r):
    r = mp.mpf(r)
    T = m = 0
    for upper in (True, False):
        def g(th):
            s = mp.sin(th)
            z = r * s * mp.expj(th)
            if not upper:
                z = mp.conj(z)
            return H(z / zeta) / (r * s * s)
        w = zeta if upper else mp.conj(zeta)
        near = (mp.arg(w - 1j * r / 2) + mp.pi / 2) / 2
        if near < 0:
            near += mp.pi
        pts = [mp.pi * k / 4000 for k in range(1, 4000)]
        roots = []
        for a, b in zip(pts, pts[1:]):
            if mp.sign(g(a)) != mp.sign(g(b)):
                roots.append(mp.findroot(g, (a, b), solver="anderson"))
        knots = sorted([mp.mpf(0), mp.pi, near] + roots)
        for a, b in zip(knots, knots[1:]):
            v = mp.quad(g, [a, b], maxdegree=10)
            if v > 0:
                T += v
            else:
                m -= v
    return T / (2 * mp.pi), m / (2 * mp.pi)
tT, tm = tsuji(2)
show("tsuji T atom r=2", tT)
show("tsuji m atom r=2", tm)
show("tsuji T - m (= int_1/Im(1/zeta)^2 dt/t^2)", tT - tm)
show("  closed form 1/t0 - 1/r, t0 = 1/|Im(1/zeta)|", abs(mp.im(1 / zeta)) - mp.mpf(1) / 2)

# potential of N = 64 uniform circle at z = 0.5 (exact: -log|1 - z^64| / ... )
N = 64
z = mp.mpf("0.5")
show("V circle N=64 z=0.5", sum(mp.log(abs(1 - z * mp.expj(2 * mp.pi * k / N))) for k in range(N)) / N)
