"""qrk - exact q-series and quantum number theory verification kit."""
