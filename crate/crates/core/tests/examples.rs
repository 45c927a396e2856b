// Every runnable example, run as a test.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run_example().unwrap();
            }
        }
    };
}

example!(build_and_inspect);
example!(contraction);
example!(relabel);
example!(connectivity);
example!(audit_theorems);
example!(srlg_network);
