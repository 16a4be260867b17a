//! Drives the command-line front end without spawning a process.

use qr_index::cli::main_with_args;

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    for args in [
        &["qrindex", "size", "--modulus", "2^4*3"][..],
        &[
            "qrindex",
            "--json",
            "decode",
            "--modulus",
            "3*5",
            "--index",
            "2",
        ],
        &["qrindex", "encode", "--modulus", "3*5", "--residue", "2"],
    ] {
        let code = main_with_args(args.iter().copied(), &mut out, &mut err);
        println!("$ {} (exit {code})", args[1..].join(" "));
        print!(
            "{}{}",
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        );
        out.clear();
        err.clear();
    }
}
