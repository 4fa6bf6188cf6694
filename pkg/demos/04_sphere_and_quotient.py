"""Certificates over GF(2) and on ideal quotients.

Two families where the coefficient bookkeeping is harder than in the
torus case.  For spheres the model lives over GF(2) and the product
starts from the cube of one bar class before a search fills in the
remaining factors.  For the punctured plane the certificate lives on
a quotient by a capped ideal, and a nonzero witness is only valid if
it stays nonzero against every membership probe of that ideal.
"""

from tcsurf import case_certificate


def main():
    print("F(S^2, n) mod 2, certified length 2n - 3:")
    for n in range(3, 7):
        cert = case_certificate("sphere", n)
        data = cert.to_json()
        print(f"  n = {n}: length {cert.certified_length}, "
              f"witness {data['witness'][0]} (x) {data['witness'][1]}")

    print()
    print("Punctured plane mod ideal, certified length 2n:")
    for n in range(1, 5):
        cert = case_certificate("punctured-mod-ideal", n)
        data = cert.to_json()
        print(f"  n = {n}: length {cert.certified_length}, "
              f"coefficient {data['coefficient']}, "
              f"witness {data['witness'][0]} (x) {data['witness'][1]}")


if __name__ == "__main__":
    main()
