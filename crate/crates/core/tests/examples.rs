//! Every example compiles into this test target and runs to completion.

macro_rules! example {
    ($module:ident, $file:literal, [$($needle:literal),* $(,)?]) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            let text = $module::run().expect(concat!($file, " runs"));
            $(assert!(text.contains($needle), "{} output lacks {:?}:\n{}", $file, $needle, text);)*
        }
    };
}

example!(
    laurent_basics,
    "laurent_basics.rs",
    [
        "{4} = v^4 - v^-4",
        "Φ̃1 Φ̃2 Φ̃4 == {4}: true",
        "round trips: true"
    ]
);
example!(
    alpha_coefficients,
    "alpha_coefficients.rs",
    [
        "alpha(1,2) = 1",
        "..#####..",
        "certificate (m=6, j=4): pass"
    ]
);
example!(
    cyclotomic_tables,
    "cyclotomic_tables.rs",
    ["l=5 (11x16): matches printed table: true"]
);
example!(milnor_links, "milnor_links.rs", ["A_7, all colors 1: factors [(1, 5), (2, 5), (3, 1), (4, 4)], unit -1, closed form agrees: true"]);
example!(hopf_pairing, "hopf_pairing.rs", ["49/49"]);
example!(
    surgery_divisibility,
    "surgery_divisibility.rs",
    ["passed: 18/18"]
);
example!(
    casson_congruence,
    "casson_congruence.rs",
    ["M_(2,-1,3): residue -36 (6ijk = -36)"]
);
example!(
    ohtsuki_series,
    "ohtsuki_series.rs",
    ["(59/288)*h^2", "c * denominator = 1 + O(h^7)"]
);
example!(
    roots_of_unity,
    "roots_of_unity.rs",
    ["membership for m ≤ 10: 80/80"]
);
example!(
    conjecture_scan,
    "conjecture_scan.rs",
    ["total violations: 0"]
);
example!(verify_suite, "verify_suite.rs", ["pass: true"]);
