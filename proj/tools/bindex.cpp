#include <bindex/cli.hpp>

int main(int argc, char** argv) { return bindex::cli::run(argc, argv); }
