from qrk.cli import main

main()
