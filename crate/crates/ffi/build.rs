fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("set by cargo");
    let header = std::path::Path::new(&crate_dir).join("include/zeonperm.h");
    cbindgen::generate(&crate_dir)
        .expect("unable to generate the C header")
        .write_to_file(header);
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
