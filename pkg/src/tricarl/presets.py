"""Figure presets: parameter sets for the standard plots.

Each preset expands to one sweep per plotted curve, with detunings,
coupling strengths and loss ladders fixed by the corresponding figure of
the system's standard presentation: gain curves (fig1, fig2), population
and squeezing versus detuning (fig3, fig4) and versus time (fig5, fig6),
three-mode test eigenvalues (fig7-fig11) and two-mode test eigenvalues
(fig12-fig15).  Grid ranges and the loss ladders of fig7-fig15, which the
captions leave unspecified, are fixed here once and for all so output
files stay diffable.
"""

from __future__ import annotations

from .model import ModelParams


def _curve(label, spec):
    return (label, spec)


def _gain_sweep(fixed, lo, hi):
    from .sweep import SweepSpec

    return SweepSpec(
        axis="delta", start=lo, stop=hi, points=301, fixed=fixed, outputs=("gain",)
    )


def _loss_ladder(rho, delta, gammas, kappas):
    """Ideal curve + gamma ladder at kappa=0 + kappa ladder at gamma=0."""
    curves = [("gamma=0;kappa=0", ModelParams(rho, delta))]
    curves += [
        (f"gamma={g:g};kappa=0", ModelParams(rho, delta, gamma1=g, gamma2=g))
        for g in gammas
    ]
    curves += [(f"gamma=0;kappa={k:g}", ModelParams(rho, delta, kappa=k)) for k in kappas]
    return curves


def build(preset_id: str):
    from .sweep import FigurePreset, SweepSpec

    def delta_sweep(fixed, lo, hi, outputs, tau):
        return SweepSpec(
            axis="delta",
            start=lo,
            stop=hi,
            points=301,
            fixed=fixed,
            outputs=outputs,
            tau=tau,
        )

    def tau_sweep(fixed, hi, outputs, points=201):
        return SweepSpec(
            axis="tau", start=0.0, stop=hi, points=points, fixed=fixed, outputs=outputs
        )

    registry: dict[str, FigurePreset] = {}

    def register(pid, description, curves):
        registry[pid] = FigurePreset(id=pid, description=description, curves=tuple(curves))

    # gain curves, semi-classical (rho = 100)
    fig1a = [
        _curve("gamma=0;kappa=0", _gain_sweep(ModelParams(100.0, 0.0), -5.0, 10.0))
    ] + [
        _curve(
            f"gamma={g:g};kappa=0",
            _gain_sweep(ModelParams(100.0, 0.0, gamma1=g, gamma2=g), -5.0, 10.0),
        )
        for g in (0.5, 1.0, 2.0)
    ]
    fig1b = [
        _curve("gamma=0;kappa=0", _gain_sweep(ModelParams(100.0, 0.0), -5.0, 10.0))
    ] + [
        _curve(
            f"gamma=0;kappa={k:g}",
            _gain_sweep(ModelParams(100.0, 0.0, kappa=k), -5.0, 10.0),
        )
        for k in (1.0, 5.0, 10.0)
    ]
    register("fig1a", "gain vs delta, rho=100, kappa=0, gamma ladder", fig1a)
    register("fig1b", "gain vs delta, rho=100, gamma=0, kappa ladder", fig1b)
    register("fig1", "gain vs delta, rho=100, both loss ladders", fig1a + fig1b[1:])

    # gain curves, quantum (rho = 0.2 / rho = 1)
    fig2a = [
        _curve("rho=0.2;gamma=0;kappa=0", _gain_sweep(ModelParams(0.2, 0.0), 0.0, 10.0))
    ] + [
        _curve(
            f"rho=0.2;gamma={g:g};kappa=0",
            _gain_sweep(ModelParams(0.2, 0.0, gamma1=g, gamma2=g), 0.0, 10.0),
        )
        for g in (0.2, 0.5, 1.0)
    ]
    fig2b = [
        _curve("rho=1;gamma=0;kappa=0", _gain_sweep(ModelParams(1.0, 0.0), -3.0, 5.0))
    ] + [
        _curve(
            f"rho=1;gamma=0;kappa={k:g}",
            _gain_sweep(ModelParams(1.0, 0.0, kappa=k), -3.0, 5.0),
        )
        for k in (0.5, 1.0, 5.0)
    ]
    register("fig2a", "gain vs delta, rho=0.2, kappa=0, gamma ladder", fig2a)
    register("fig2b", "gain vs delta, rho=1, gamma=0, kappa ladder", fig2b)
    register("fig2", "gain vs delta, quantum regime, both panels", fig2a + fig2b)

    # populations / squeezing vs delta at tau = 2 (rho = 100)
    register(
        "fig3",
        "n1 and xi12 vs delta, rho=100, tau=2, kappa=0, gamma in {0,0.5,1}",
        [
            _curve(
                f"gamma={g:g};kappa=0",
                delta_sweep(
                    ModelParams(100.0, 0.0, gamma1=g, gamma2=g),
                    -5.0,
                    10.0,
                    ("n1", "xi12"),
                    2.0,
                ),
            )
            for g in (0.0, 0.5, 1.0)
        ],
    )
    register(
        "fig4",
        "n1 and xi12 vs delta, rho=100, tau=2, gamma=0, kappa in {0,1,5}",
        [
            _curve(
                f"gamma=0;kappa={k:g}",
                delta_sweep(
                    ModelParams(100.0, 0.0, kappa=k), -5.0, 10.0, ("n1", "xi12"), 2.0
                ),
            )
            for k in (0.0, 1.0, 5.0)
        ],
    )

    # populations / squeezing vs tau
    register(
        "fig5",
        "n1 and xi12 vs tau, rho=100, delta=3.5, three loss configurations",
        [
            _curve(
                f"gamma={g:g};kappa={k:g}",
                tau_sweep(
                    ModelParams(100.0, 3.5, gamma1=g, gamma2=g, kappa=k),
                    10.0,
                    ("n1", "xi12"),
                ),
            )
            for g, k in ((0.0, 0.0), (0.2, 0.0), (0.5, 0.5))
        ],
    )
    register(
        "fig6",
        "n1 and xi13 vs tau, rho=0.2, delta=5, three loss configurations",
        [
            _curve(
                f"gamma={g:g};kappa={k:g}",
                tau_sweep(
                    ModelParams(0.2, 5.0, gamma1=g, gamma2=g, kappa=k),
                    20.0,
                    ("n1", "xi13"),
                ),
            )
            for g, k in ((0.0, 0.0), (0.15, 0.0), (0.15, 0.15))
        ],
    )

    # three-mode test eigenvalues
    sc_gammas, sc_kappas = (0.5, 1.0, 2.0), (1.0, 5.0)
    q_gammas, q_kappas = (0.15, 0.5), (0.15, 0.5)
    for pid, mode, rho, delta, gammas, kappas in (
        ("fig7", 1, 100.0, 0.01, sc_gammas, sc_kappas),
        ("fig8", 2, 100.0, 0.01, sc_gammas, sc_kappas),
        ("fig9", 3, 100.0, 0.01, sc_gammas, sc_kappas),
        ("fig10", 1, 0.2, 5.0, q_gammas, q_kappas),
        ("fig11", 2, 0.2, 5.0, q_gammas, q_kappas),
    ):
        output = (f"mineig_gamma{mode}",)
        curves = [
            _curve(label, tau_sweep(fixed, 5.0, output, points=101))
            for label, fixed in _loss_ladder(rho, delta, gammas, kappas)
        ]
        register(
            pid,
            f"min eig of three-mode test {mode}, rho={rho:g}, delta={delta:g}",
            curves,
        )

    # two-mode test eigenvalues
    for pid, pair, rho, delta, gammas, kappas in (
        ("fig12", "s12", 100.0, 0.0, sc_gammas, sc_kappas),
        ("fig13", "s13", 100.0, 0.0, sc_gammas, sc_kappas),
        ("fig14", "s12", 0.2, 5.0, q_gammas, q_kappas),
        ("fig15", "s13", 0.2, 5.0, q_gammas, q_kappas),
    ):
        output = (f"mineig_{pair}",)
        curves = [
            _curve(label, tau_sweep(fixed, 5.0, output, points=101))
            for label, fixed in _loss_ladder(rho, delta, gammas, kappas)
        ]
        register(
            pid,
            f"min eig of two-mode test {pair}, rho={rho:g}, delta={delta:g}",
            curves,
        )

    return registry[preset_id]
