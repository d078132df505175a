# Regenerates the constants in test_frozen.cpp.
from mpmath import mp, mpf, sqrt, pi, sin, cos, tan, gamma, gammainc, quad, exp, log, inf, sinc
mp.dps = 40
def sincpi_sqrt(s):
    r = sqrt(mp.mpc(s)); return (sin(pi*r)/(pi*r)).real if s != 0 else mpf(1)
def thick(k, lam):
    s0 = (1-mpf(k)/4)**2; return sincpi_sqrt(s0)/sincpi_sqrt(s0+lam*mpf(k)/2)
def crm(k, lam):
    k = mpf(k); s = (1-4/k)**2 - 8*lam/k
    return (-cos(pi*4/k)/cos(pi*sqrt(mp.mpc(s)))).real
def dil(k):
    k = mpf(k); u = 1-4/k; return (k/4-1)/(pi*tan(pi*u))
def lqg(g2): g = sqrt(mpf(g2)); return g, 2/g+g/2
def ubar(g2, a):
    g, q = lqg(g2); a0 = 2/g*(q-a)
    base = 2**(-g*a/2)*2*pi/gamma(1-mpf(g2)/4)
    return base**a0*gamma(g*a/2-mpf(g2)/4)
def mass(g2, a, l):
    g, q = lqg(g2); return 2/g*2**(-a*a/2)*ubar(g2,a)*l**(2/g*(a-q)-1)
def shape(g2,a): g,q=lqg(g2); return 2/g*(q-a)
def scale(g2): return 1/(4*sin(pi*mpf(g2)/4))
def fzzlap(g2,a,l,mu):
    a0=shape(g2,a); s=scale(g2)
    pdf=lambda x: s**a0*x**(-a0-1)*exp(-s/x)/gamma(a0)
    return mass(g2,a,l)*quad(lambda x: exp(-mu*l*l*x)*pdf(x),[0,s,10*s,inf])
def weld(g2,a,eps,delta):
    a0=shape(g2,a); s=scale(g2)
    f=lambda l: l*mass(g2,a,l)**2*gammainc(a0,0,l*l*s,regularized=True)
    return quad(f,[eps,1e-2,delta])
def refl(g2,a):
    g,q=lqg(g2); u=g/2*(q-a); a0=2/g*(q-a); h=mpf(g2)/4
    return -(pi*gamma(h)/gamma(1-h))**a0/a0*gamma(-u)/(gamma(u)*gamma(a0))
for name,v in [
 ("thickness_mgf k=3 l=0.3",thick(3,mpf('0.3'))),("thickness_mgf k=6 l=-0.5",thick(6,mpf('-0.5'))),
 ("cr_moment k=3 l=0.7",crm(3,mpf('0.7'))),("cr_moment k=6 l=2",crm(6,2)),("cr_moment k=3 l=-0.05",crm(3,mpf('-0.05'))),
 ("dilation k=3",dil(3)),("dilation k=5.5",dil(mpf('5.5'))),
 ("u_bar g2=3 a=1.2",ubar(3,mpf('1.2'))),("reflection g2=3 a=1.2",refl(3,mpf('1.2'))),
 ("fzz_laplace g2=3 a=1.2 l=1.3 mu=0.8",fzzlap(3,mpf('1.2'),mpf('1.3'),mpf('0.8'))),
 ("welding g2=3 a=1 eps=1e-3 d=0.1",weld(3,mpf(1),mpf('1e-3'),mpf('0.1'))),
 ("welding g2=3 a=1.4 eps=1e-3 d=0.1",weld(3,mpf('1.4'),mpf('1e-3'),mpf('0.1'))),
]: print(name, mp.nstr(v,20))
