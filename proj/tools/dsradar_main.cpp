#include "dsradar/commands.hpp"

int main(int argc, char** argv) {
    return dsradar::cli::run(argc, argv);
}
