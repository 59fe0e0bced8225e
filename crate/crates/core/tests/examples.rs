//! Every crate example, run as a test.

mod classification {
    include!("../examples/classification.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod cli_report {
    include!("../examples/cli_report.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod depth_of_associated_graded {
    include!("../examples/depth_of_associated_graded.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod exact_arith {
    include!("../examples/exact_arith.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod guarded_caps {
    include!("../examples/guarded_caps.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod hilbert_series {
    include!("../examples/hilbert_series.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod instance_files {
    include!("../examples/instance_files.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod presentation_invariants {
    include!("../examples/presentation_invariants.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod ratliff_rush {
    include!("../examples/ratliff_rush.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod ring_parsing {
    include!("../examples/ring_parsing.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod superficial_sequence {
    include!("../examples/superficial_sequence.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod truncated_module {
    include!("../examples/truncated_module.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}

mod valabrega_valla {
    include!("../examples/valabrega_valla.rs");

    #[test]
    fn runs() {
        run_example().unwrap();
    }
}
