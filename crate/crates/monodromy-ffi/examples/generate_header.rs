//! Regenerate include/monodromy.h from the crate's public C ABI.

fn main() {
    let crate_dir = env!("CARGO_MANIFEST_DIR");
    cbindgen::Builder::new()
        .with_crate(crate_dir)
        .with_config(cbindgen::Config::from_file(format!("{crate_dir}/cbindgen.toml")).unwrap())
        .generate()
        .expect("cbindgen failed")
        .write_to_file(format!("{crate_dir}/include/monodromy.h"));
    println!("wrote include/monodromy.h");
}
