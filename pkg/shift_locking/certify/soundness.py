# -*- coding: utf-8 -*-
"""
@file
@brief Brute force validation of a certificate against
every periodic orbit of small period.
"""
import pandas
from ..symbolic import enumerate_periodic_points, PeriodicPoint


class SoundnessReport:
    """
    Result of @see fn soundness_check.
    *rows* holds the average of every periodic orbit,
    *failures* the orbits contradicting the certificate.
    """

    def __init__(self, passed, level, certified_average, error, rows, failures):
        self.passed = passed
        self.level = level
        self.certified_average = certified_average
        self.error = error
        self.rows = rows
        self.failures = failures

    def __bool__(self):
        return self.passed

    def to_dataframe(self):
        "Returns the orbit averages as a :epkg:`pandas:DataFrame`."
        return pandas.DataFrame(self.rows)

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(passed=self.passed, level=self.level,
                    certified_average=self.certified_average, error=self.error,
                    n_orbits=len(self.rows), failures=self.failures)

    def __repr__(self):
        return "SoundnessReport(passed={0}, failures={1})".format(
            self.passed, len(self.failures))


def soundness_check(cert, f, max_period=8, safety_depth=4, guard=16, fLOG=None):
    """
    Compares the average of ``A_m f`` along the certified orbit
    with its average along every periodic orbit of period at most
    *max_period*, ``m = level + safety_depth``. The check fails
    only if another orbit is better by more than twice the error
    ``‖f - A_m f‖∞`` plus the quadrature error.

    @param      cert            @see cl LockingCertificate
    @param      f               @see cl Potential
    @param      max_period      highest period
    @param      safety_depth    additional levels
    @param      guard           resource guard on *max_period*
    @param      fLOG            logging function
    @return                     @see cl SoundnessReport
    """
    m = cert.level + safety_depth
    available = f.max_level_available()
    if available is not None:
        m = min(m, available)
    values = f.cylinder_values(m).values
    error = f.sup_error(m) + f.approximation_error(m)
    orbit = PeriodicPoint(cert.orbit.repeating_word)
    cert_avg = orbit.birkhoff_average(values)
    rows = []
    failures = []
    for point in enumerate_periodic_points(max_period, guard=guard):
        if point == orbit:
            continue
        avg = point.birkhoff_average(values)
        rows.append(dict(orbit=point.to_json(), period=point.period, average=avg))
        if avg - error > cert_avg + error:
            failures.append(point.to_json())
    if fLOG:
        fLOG("[soundness_check] m={0} certified={1} error={2} orbits={3} failures={4}".format(
            m, cert_avg, error, len(rows), len(failures)))
    return SoundnessReport(len(failures) == 0, m, cert_avg, error, rows, failures)
