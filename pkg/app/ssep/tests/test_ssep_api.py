"""
Tests for the SSEP API
"""

from django.test import SimpleTestCase
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APIClient


PSI_URL = reverse('ssep:psi')
FREE_ENERGY_URL = reverse('ssep:free-energy')
RATE_URL = reverse('ssep:rate')


class PsiApiTests(SimpleTestCase):
    """ Test the correlation endpoint """

    def setUp(self):
        self.client = APIClient()

    def test_ssep_kernel(self):
        res = self.client.post(
            PSI_URL, {'points': [0.2, 0.4, 0.6]}, format='json'
        )

        self.assertEqual(res.status_code, status.HTTP_200_OK)
        self.assertAlmostEqual(res.data['value'], 0.032)

    def test_sharp_kernel(self):
        payload = {'points': [0.2, 0.5], 'kind': 'sharp'}

        res = self.client.post(PSI_URL, payload, format='json')

        self.assertAlmostEqual(res.data['value'], 0.1)

    def test_coincident_points(self):
        res = self.client.post(PSI_URL, {'points': [0.3, 0.3]}, format='json')

        self.assertEqual(res.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(res.data['error'], 'CoincidenceError')

    def test_too_many_points(self):
        payload = {'points': [0.1 * k for k in range(1, 9)]}

        res = self.client.post(PSI_URL, payload, format='json')

        self.assertEqual(res.status_code, status.HTTP_400_BAD_REQUEST)


class ProfileApiTests(SimpleTestCase):
    """ Test the free energy and rate endpoints """

    def setUp(self):
        self.client = APIClient()

    def test_zero_field(self):
        payload = {'h': {'constant': 0.0, 'grid_size': 32}}

        res = self.client.post(FREE_ENERGY_URL, payload, format='json')

        self.assertEqual(res.status_code, status.HTTP_200_OK)
        self.assertAlmostEqual(res.data['F'], 0.0)
        self.assertEqual(len(res.data['g']), 33)

    def test_field_needs_one_form(self):
        payload = {'h': {'constant': 0.0, 'values': [0.0] * 17}}

        res = self.client.post(FREE_ENERGY_URL, payload, format='json')

        self.assertEqual(res.status_code, status.HTTP_400_BAD_REQUEST)

    def test_rate_of_steady_profile(self):
        payload = {'n': {'values': [j / 32 for j in range(33)]}}

        res = self.client.post(RATE_URL, payload, format='json')

        self.assertEqual(res.status_code, status.HTTP_200_OK)
        self.assertAlmostEqual(res.data['I'], 0.0, places=10)

    def test_rate_outside_unit_interval(self):
        payload = {'n': {'constant': 1.0, 'grid_size': 16}}

        res = self.client.post(RATE_URL, payload, format='json')

        self.assertEqual(res.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(res.data['error'], 'DomainError')
