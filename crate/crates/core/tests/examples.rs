// Every runnable example, executed as a test.

mod shuffle_algebra {
    include!("../examples/shuffle_algebra.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod path_signature {
    include!("../examples/path_signature.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod gl_invariants {
    include!("../examples/gl_invariants.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod so_invariants {
    include!("../examples/so_invariants.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod perm_invariants {
    include!("../examples/perm_invariants.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod time_augmented {
    include!("../examples/time_augmented.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod signed_volume {
    include!("../examples/signed_volume.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod lemniscate {
    include!("../examples/lemniscate.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod feature_extraction {
    include!("../examples/feature_extraction.rs");

    #[test]
    fn runs() {
        main();
    }
}
