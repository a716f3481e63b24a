#include <iostream>
#include <sstream>

#include "sring/cli.hpp"

int main(int argc, char** argv) {
    std::ostringstream out, err;
    const int status = sring::dispatch({argv + 1, argv + argc}, out, err);
    std::cout << out.str() << std::flush;
    std::cerr << err.str();
    return status;
}
