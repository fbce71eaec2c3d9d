from tait.frontend.cli import main

main()
