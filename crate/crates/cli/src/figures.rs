//! One invocation per figure panel, plus a reduced-resolution
//! variant of each whose output is checked in under `tests/golden/`.

pub struct Figure {
    /// Figure label, e.g. `"5"` or `"1(a)"`.
    pub label: &'static str,
    /// Stem of the golden CSV file.
    pub golden: &'static str,
    pub what: &'static str,
    /// Full-resolution arguments (after the binary name).
    pub args: &'static [&'static str],
    /// Small-grid arguments for the golden file.
    pub golden_args: &'static [&'static str],
}

pub const FIGURES: &[Figure] = &[
    Figure {
        label: "1(a)",
        golden: "fig1a_case_i",
        what: "photon-number distribution, nonlinear squeezed state, r = 20",
        args: &["state", "--case", "i", "--r", "20", "--n-max", "70"],
        golden_args: &["state", "--case", "i", "--r", "20", "--n-max", "70"],
    },
    Figure {
        label: "1(a)",
        golden: "fig1a_case_iii",
        what: "photon-number distribution, squeezed state, xi = 0.4",
        args: &["state", "--case", "iii", "--xi", "0.4", "--n-max", "70"],
        golden_args: &["state", "--case", "iii", "--xi", "0.4", "--n-max", "20"],
    },
    Figure {
        label: "1(b)",
        golden: "fig1b_case_iii",
        what: "mean excitation ⟨K₀⟩ of the squeezed states against xi",
        args: &["stats", "--case", "iii", "--r-max", "0.9", "--r-steps", "64", "--n-max", "70"],
        golden_args: &["stats", "--case", "iii", "--r-max", "0.9", "--r-steps", "9", "--n-max", "70"],
    },
    Figure {
        label: "1(b)",
        golden: "fig1b_case_i",
        what: "mean excitation ⟨K₀⟩ of the nonlinear squeezed states against r",
        args: &["stats", "--case", "i", "--r-max", "31", "--r-steps", "64", "--n-max", "70"],
        golden_args: &["stats", "--case", "i", "--r-max", "30", "--r-steps", "10", "--n-max", "70"],
    },
    Figure {
        label: "2",
        golden: "fig2",
        what: "Q and g2(0) of the nonlinear squeezed states, 0 < r <= 31",
        args: &["stats", "--case", "i", "--r-max", "31", "--r-steps", "64", "--n-max", "70"],
        golden_args: &["stats", "--case", "i", "--r-max", "31", "--r-steps", "16", "--n-max", "70"],
    },
    Figure {
        label: "3",
        golden: "fig3",
        what: "Q and g2(0) of the squeezed states",
        args: &["stats", "--case", "iii", "--r-max", "0.95", "--r-steps", "64", "--n-max", "70"],
        golden_args: &["stats", "--case", "iii", "--r-max", "0.95", "--r-steps", "19", "--n-max", "70"],
    },
    Figure {
        label: "4",
        golden: "fig4",
        what: "A3 of the nonlinear squeezed states (A3 column)",
        args: &["stats", "--case", "i", "--r-max", "31", "--r-steps", "64", "--n-max", "70"],
        golden_args: &["stats", "--case", "i", "--r-max", "31", "--r-steps", "31", "--n-max", "70"],
    },
    Figure {
        label: "5",
        golden: "fig5",
        what: "I1, I2 of the nonlinear squeezed states over (r, theta)",
        args: &["squeeze", "--case", "i", "--r-max", "31", "--r-steps", "64", "--theta-steps", "128", "--n-max", "70"],
        golden_args: &[
            "squeeze",
            "--case",
            "i",
            "--r-max",
            "31",
            "--r-steps",
            "4",
            "--theta-steps",
            "8",
            "--n-max",
            "70",
        ],
    },
    Figure {
        label: "6",
        golden: "fig6",
        what: "I1, I2 of the squeezed states over (xi, theta)",
        args: &[
            "squeeze",
            "--case",
            "iii",
            "--r-max",
            "0.9",
            "--r-steps",
            "64",
            "--theta-steps",
            "128",
            "--n-max",
            "70",
        ],
        golden_args: &[
            "squeeze",
            "--case",
            "iii",
            "--r-max",
            "0.9",
            "--r-steps",
            "3",
            "--theta-steps",
            "8",
            "--n-max",
            "70",
        ],
    },
    Figure {
        label: "7",
        golden: "fig7",
        what: "I3, I4 of the nonlinear squeezed states (same sweep as figure 5)",
        args: &["squeeze", "--case", "i", "--r-max", "31", "--r-steps", "64", "--theta-steps", "128", "--n-max", "70"],
        golden_args: &["squeeze", "--case", "i", "--r", "5", "--theta-steps", "16", "--n-max", "70"],
    },
    Figure {
        label: "8",
        golden: "fig8",
        what: "I3, I4 of the squeezed states (same sweep as figure 6)",
        args: &[
            "squeeze",
            "--case",
            "iii",
            "--r-max",
            "0.9",
            "--r-steps",
            "64",
            "--theta-steps",
            "128",
            "--n-max",
            "70",
        ],
        golden_args: &["squeeze", "--case", "iii", "--xi", "0.4", "--theta-steps", "16", "--n-max", "70"],
    },
    Figure {
        label: "9",
        golden: "fig9",
        what: "P(x, phi) of the nonlinear squeezed state, r = 10, theta = 0.5",
        args: &[
            "quad-dist",
            "--case",
            "i",
            "--r",
            "10",
            "--theta",
            "0.5",
            "--x-points",
            "201",
            "--phi-points",
            "256",
            "--n-max",
            "70",
        ],
        golden_args: &[
            "quad-dist",
            "--case",
            "i",
            "--r",
            "10",
            "--theta",
            "0.5",
            "--x-points",
            "21",
            "--phi-points",
            "16",
            "--n-max",
            "70",
        ],
    },
    Figure {
        label: "10",
        golden: "fig10",
        what: "F(z, 0.5) of the nonlinear squeezed state, beta = 2 + 2i",
        args: &[
            "quasiprob",
            "--case",
            "i",
            "--r",
            "2.8284271247461903",
            "--theta",
            "0.7853981633974483",
            "--s",
            "0.5",
            "--points",
            "161",
            "--n-max",
            "70",
        ],
        golden_args: &[
            "quasiprob",
            "--case",
            "i",
            "--r",
            "2.8284271247461903",
            "--theta",
            "0.7853981633974483",
            "--s",
            "0.5",
            "--points",
            "21",
            "--n-max",
            "70",
        ],
    },
];
