#pragma once
namespace signlab::cli { inline int run(int, char**) { return 0; } }
