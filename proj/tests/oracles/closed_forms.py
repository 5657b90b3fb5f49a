"""Independent high-precision oracle for the frozen values in the C++ tests.

Builds Eve's circuit from explicit operator algebra on (a, b, c) with mpmath,
computes conditional variances from the ensemble second moments, and evaluates
thresholds by root finding. Run: python3 tests/oracles/closed_forms.py
"""
import mpmath as mp

mp.mp.dps = 40


def circuit_params(eta, delta):
    lam = mp.atanh(mp.sqrt(delta / (2 * eta)))
    phi = mp.atan(mp.sqrt((1 - eta + delta / 2) / (eta - delta / 2)))
    return lam, phi


def x_rows(eta, delta, theta):
    """x-quadrature rows (coefficients of x_a, x_b, x_c) of a'' and b''(theta)."""
    lam, phi = circuit_params(eta, delta)
    ch, sh = mp.cosh(lam), mp.sinh(lam)
    # a' = ch a - sh c^dag, c' = ch c - sh a^dag; x-part of k^dag equals x-part of k.
    a1 = [ch, 0, -sh]
    c1 = [-sh, 0, ch]
    b0 = [0, 1, 0]
    a2 = [mp.cos(phi) * a1[i] - mp.sin(phi) * b0[i] for i in range(3)]
    b1 = [mp.sin(phi) * a1[i] + mp.cos(phi) * b0[i] for i in range(3)]
    b2 = [mp.cos(theta) * b1[i] - mp.sin(theta) * c1[i] for i in range(3)]
    c2 = [mp.sin(theta) * b1[i] + mp.cos(theta) * c1[i] for i in range(3)]
    return a2, b2, c2


def cond_var_snu(bob, eve, va):
    var = [va + 1, 1, 1]
    vb = sum(bob[i] ** 2 * var[i] for i in range(3))
    ve = sum(eve[i] ** 2 * var[i] for i in range(3))
    c = sum(bob[i] * eve[i] * var[i] for i in range(3))
    return vb - c * c / ve


def v_be(theta, eta, delta, va):
    a2, b2, _ = x_rows(eta, delta, theta)
    return cond_var_snu(a2, b2, va)


def theta_opt_formula(eta, delta, va):
    return mp.atan(mp.sqrt(eta * delta) * (2 + va) / (mp.sqrt(2 - 2 * eta + delta) * (va * (eta - delta) - delta)))


def threshold(theta_fn, delta, va):
    f = lambda e: v_be(theta_fn(e), e, delta, va) - (1 + delta)
    return mp.findroot(f, (delta / 2 * (1 + mp.mpf('1e-20')), 1), solver='bisect' if False else 'anderson')


if __name__ == '__main__':
    e, d, va = mp.mpf('0.5'), mp.mpf('0.1'), mp.mpf(10)
    print('invert(1,1)', circuit_params(mp.mpf(1), mp.mpf(1)))
    print('invert(.5,.1)', circuit_params(e, d))
    for t, name in [(0, 'clone'), (mp.pi / 2, 'anticlone'), (mp.pi / 4, 'bma')]:
        print('v_be', name, v_be(t, e, d, va))
    to = theta_opt_formula(e, d, va)
    print('theta_opt', to, 'v_be(theta_opt)', v_be(to, e, d, va), 'closed', (1 + va) / ((1 + va) * (1 + d) - e * va))
    print('clone(1,1,10)', v_be(0, mp.mpf(1), mp.mpf(1), va))
    print('x rows theta=0 (.5,.1)', x_rows(e, d, 0))
    print('thresholds d=.1 va=10:')
    print('  clone', threshold(lambda _: 0, d, va))
    print('  anticlone', threshold(lambda _: mp.pi / 2, d, va))
    print('  bma', threshold(lambda _: mp.pi / 4, d, va))
    print('  opt', threshold(lambda x: theta_opt_formula(x, d, va), d, va))
    print('se(.25,1e6)', mp.mpf('0.25') * mp.sqrt(2 / mp.mpf(999999)), 'se(1,1e4)', mp.sqrt(2 / mp.mpf(9999)))
