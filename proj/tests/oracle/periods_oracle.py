# Independent high-precision reference values for the period integrals.
# y runs between the roots a < b of y^q (1-y)^p = 4 tau^2; with y = (a+b)/2 - (b-a)/2 cos(theta)
# the square-root endpoint singularities disappear and tanh-sinh converges to full precision.
from mpmath import mp, mpf, sqrt, quad, pi, beta, cos, sin, asin, acos
mp.dps = 50

def tmax(p, q):
    n = p + q
    return sqrt(mpf(p)**p * mpf(q)**q / mpf(n)**n) / 2

def bis(f, a, b, it=200):
    fa = f(a)
    for _ in range(it):
        m = (a + b) / 2
        fm = f(m)
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return (a + b) / 2

def ext(p, q, tau):
    n = p + q
    f = lambda y: y**q * (1 - y)**p - 4 * tau**2
    return bis(f, mpf(0), mpf(q) / n), bis(f, mpf(q) / n, mpf(1))

def periods(p, q, tau):
    n = p + q
    a, b = ext(p, q, tau)
    c = mpf(q) / n
    h = (b - a) / 2
    m = (a + b) / 2
    f = lambda y: y**q * (1 - y)**p - 4 * tau**2
    # dt = dy / (2 sqrt(f)), f = (y-a)(b-y) g, dy = h sin(th) dth, (y-a)(b-y) = h^2 sin^2(th)
    def g(th):
        y = m - h * cos(th)
        return y, f(y) / (h * h * sin(th)**2)
    thc = acos((m - c) / h)
    dt = lambda th: 1 / (2 * sqrt(abs(g(th)[1])))
    pplus = quad(dt, [0, thc])
    pminus = quad(dt, [thc, pi])
    # psi_1 over a full y period is 2 int 2 tau / (1-y) dt over [a, b]; pthat = (p/2) psi_1(2 p_tau)
    pthat = mpf(p) / 2 * 2 * quad(lambda th: 2 * tau / (1 - g(th)[0]) * dt(th), [0, pi])
    return pplus, pminus, pplus + pminus, pthat, a, b

if __name__ == "__main__":
    for (p, q, tau) in [(1, 2, mpf('0.1')), (2, 3, tmax(2, 3) / 2), (3, 3, tmax(3, 3) / 10), (2, 2, mpf('0.06'))]:
        r = periods(p, q, tau)
        print((p, q), mp.nstr(tau, 20), [mp.nstr(x, 17) for x in r])
    for (p, q) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]:
        t = tmax(p, q) / 2
        hs = [mpf('1e-8'), mpf('1e-10')]
        d = [(periods(p, q, t + h)[3] - periods(p, q, t - h)[3]) / (2 * h) for h in hs]
        print('dpthat', (p, q), mp.nstr(d[0], 15), mp.nstr(d[1], 15))
    n = 3
    print('T1(3)', mp.nstr(beta(mpf(1) / 2 - mpf(1) / n, mpf(1) / 2) / (2 * n), 17),
          mp.nstr(quad(lambda y: 1 / (2 * sqrt(y**3 - 1)), [1, 2, mp.inf]), 17))
    for k in [3, 4, 5]:
        print('b', k, mp.nstr(mpf(4)**(-1 + mpf(1) / k) * quad(lambda z: 1 / sqrt(z**k - 1), [1, 2, mp.inf]), 17))
    for (p, q, num, den, lo, hi) in [(1, 2, 4, 7, '0.15', '0.17'), (2, 2, 4, 7, '0.018', '0.019'),
                                     (2, 2, 6, 11, '0.009', '0.011'), (2, 3, 3, 5, '0.013', '0.014')]:
        r = bis(lambda s: periods(p, q, s)[3] - num * pi / den, mpf(lo), mpf(hi), 60)
        print('root', (p, q), f'{num}/{den}', mp.nstr(r, 17))
    print('torque (1,2) tau=0.1', mp.nstr(6 * pi * mpf('0.1'), 17))
