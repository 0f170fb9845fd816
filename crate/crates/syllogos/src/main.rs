fn main() {
    // die quietly instead of panicking when stdout closes early, e.g. when
    // piped into `head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(syllogos::cli::run());
}
